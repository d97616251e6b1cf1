#include "zns/signature.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <charconv>
#include <numeric>
#include <sstream>
#include <tuple>

#include "zns/error.hpp"

namespace zns {

namespace {

using Rational = boost::rational<long long>;

int parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> parse_list(std::string_view s) {
  std::vector<int> out;
  if (s.empty() || s == "0") return out;
  for (std::string_view item : split(s, ';')) out.push_back(parse_int(item));
  return out;
}

std::string join(const std::vector<int>& xs) {
  if (xs.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ";" : "") << xs[i];
  return os.str();
}

// key=value pairs separated by commas; a bare token extends the previous value as a
// list item.
std::vector<std::pair<std::string, std::string>> key_values(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::string_view token : split(text, ',')) {
    if (token.empty()) continue;
    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos) {
      if (out.empty()) throw Error(ErrorKind::ParseError, "missing key before '" + std::string(token) + "'");
      out.back().second += ";" + std::string(token);
      continue;
    }
    const std::string key(token.substr(0, eq));
    for (const auto& kv : out) {
      if (kv.first == key) throw Error(ErrorKind::ParseError, "duplicate key " + key);
    }
    out.emplace_back(key, std::string(token.substr(eq + 1)));
  }
  return out;
}

bool divides(int d, int n) { return d != 0 && n % d == 0; }

bool pseudo_order_ok(int r, int n) {
  return r >= 2 && r % 2 == 0 && divides(r / 2, n) && !divides(r, n);
}

}  // namespace

// ---------------------------------------------------------------------------
// Conformal

bool canonical_less(const ConformalSignature& x, const ConformalSignature& y) {
  return std::make_tuple(x.m(), x.a, x.b(), std::cref(x.elliptic), std::cref(x.abelian)) <
         std::make_tuple(y.m(), y.a, y.b(), std::cref(y.elliptic), std::cref(y.abelian));
}

ConformalSignature canonical(ConformalSignature sig) {
  std::sort(sig.elliptic.begin(), sig.elliptic.end());
  std::sort(sig.abelian.begin(), sig.abelian.end());
  return sig;
}

void validate_orders(const ConformalSignature& sig) {
  if (sig.n < 1) throw Error(ErrorKind::InadmissibleSignature, "n must be positive");
  if (sig.a < 0) throw Error(ErrorKind::InadmissibleSignature, "a must be nonnegative");
  for (const auto* list : {&sig.elliptic, &sig.abelian}) {
    for (int k : *list) {
      if (k < 2 || !divides(k, sig.n)) {
        throw Error(ErrorKind::OrderNotDividing,
                    "order " + std::to_string(k) + " is not a divisor >= 2 of " + std::to_string(sig.n));
      }
    }
  }
}

bool admissible(const ConformalSignature& sig) {
  try {
    validate_orders(sig);
  } catch (const Error&) {
    return false;
  }
  if (sig.m() + sig.a > 0) return true;
  int g = 0;
  for (int k : sig.elliptic) g = std::gcd(g, sig.n / k);
  return g == 1;
}

void require_admissible(const ConformalSignature& sig) {
  validate_orders(sig);
  if (!admissible(sig)) {
    throw Error(ErrorKind::InadmissibleSignature,
                "m = a = 0 needs gcd(n/n_1, ..., n/n_b) = 1: " + to_string(sig));
  }
}

long long conformal_rank(const ConformalSignature& sig) {
  long long g = static_cast<long long>(sig.n) * (sig.m() + sig.a - 1) + 1;
  for (int k : sig.elliptic) g += static_cast<long long>(sig.n / k) * (k - 1);
  return g;
}

std::string to_string(const ConformalSignature& sig) {
  std::ostringstream os;
  os << "m=" << sig.m() << ",a=" << sig.a << ",b=" << join(sig.elliptic)
     << ",l=" << join(sig.abelian);
  return os.str();
}

ConformalSignature parse_conformal(std::string_view text, int n) {
  ConformalSignature sig;
  sig.n = n;
  int m = -1;
  bool have_l = false;
  for (const auto& [key, value] : key_values(text)) {
    if (key == "m") {
      m = parse_int(value);
    } else if (key == "a") {
      sig.a = parse_int(value);
    } else if (key == "b") {
      sig.elliptic = parse_list(value);
    } else if (key == "l") {
      sig.abelian = parse_list(value);
      have_l = true;
    } else {
      throw Error(ErrorKind::ParseError, "unknown key " + key);
    }
  }
  if (m < 0) m = have_l ? static_cast<int>(sig.abelian.size()) : 0;
  if (!have_l) sig.abelian.assign(static_cast<std::size_t>(m), n);
  if (static_cast<int>(sig.abelian.size()) != m) {
    throw Error(ErrorKind::ParseError, "l lists " + std::to_string(sig.abelian.size()) +
                                           " orders but m=" + std::to_string(m));
  }
  if (sig.a < 0) throw Error(ErrorKind::ParseError, "a must be nonnegative");
  return canonical(sig);
}

// ---------------------------------------------------------------------------
// Extended

int ExtendedSignature::factor_count() const {
  return glides + loxodromics + static_cast<int>(elliptic.size() + pseudo_elliptic.size() +
                                                 lox_elliptic.size() + lox_pseudo.size()) +
         glide_half_turns + reflections + static_cast<int>(real_schottky.size());
}

ExtendedSignature canonical(ExtendedSignature sig) {
  for (auto* list : {&sig.elliptic, &sig.pseudo_elliptic, &sig.lox_elliptic, &sig.lox_pseudo}) {
    std::sort(list->begin(), list->end());
  }
  for (auto& f : sig.real_schottky) std::sort(f.orders.begin(), f.orders.end());
  std::sort(sig.real_schottky.begin(), sig.real_schottky.end(),
            [](const RealSchottkyFactor& x, const RealSchottkyFactor& y) {
              return std::tie(x.gamma, x.orders) < std::tie(y.gamma, y.orders);
            });
  return sig;
}

void validate_factors(const ExtendedSignature& sig) {
  const int n = sig.n;
  if (n < 1) throw Error(ErrorKind::InadmissibleSignature, "n must be positive");
  if (sig.glides < 0 || sig.loxodromics < 0 || sig.glide_half_turns < 0 || sig.reflections < 0) {
    throw Error(ErrorKind::InadmissibleSignature, "negative factor count");
  }
  auto order_error = [n](const char* kind, int r) {
    return Error(ErrorKind::OrderNotDividing, std::string(kind) + " order " + std::to_string(r) +
                                                  " not allowed for n=" + std::to_string(n));
  };
  for (const auto* list : {&sig.elliptic, &sig.lox_elliptic}) {
    for (int k : *list) {
      if (k < 2 || !divides(k, n)) throw order_error("elliptic", k);
    }
  }
  for (const auto* list : {&sig.pseudo_elliptic, &sig.lox_pseudo}) {
    for (int r : *list) {
      if (!pseudo_order_ok(r, n)) throw order_error("pseudo-elliptic", r);
    }
  }
  if (sig.glide_half_turns > 0 && n % 2 != 0) {
    throw Error(ErrorKind::InvalidKindForParity, "glide/half-turn factors need n even");
  }
  if ((sig.reflections > 0 || !sig.real_schottky.empty()) && n % 2 == 0) {
    throw Error(ErrorKind::InvalidKindForParity, "reflection factors need n odd");
  }
  for (const auto& f : sig.real_schottky) {
    if (f.gamma < 0) throw Error(ErrorKind::InadmissibleSignature, "negative real Schottky rank");
    if (f.gamma == 0 && f.orders.empty()) {
      throw Error(ErrorKind::InadmissibleSignature, "empty real Schottky factor (a plain reflection)");
    }
    for (int k : f.orders) {
      if (k < 2 || !divides(k, n)) throw order_error("real elliptic", k);
    }
  }
}

bool condition_one(const ExtendedSignature& sig) {
  return sig.glides > 0 || !sig.pseudo_elliptic.empty() || !sig.lox_pseudo.empty() ||
         sig.glide_half_turns > 0 || sig.reflections > 0 || !sig.real_schottky.empty();
}

bool condition_two(const ExtendedSignature& sig) {
  const int n = sig.n;
  if (n < 2 || sig.glides > 0 || sig.glide_half_turns > 0) return true;
  for (const auto& f : sig.real_schottky) {
    if (f.gamma > 0) return true;
  }
  int g = 0;
  auto add = [&](int r) { g = std::gcd(g, 2 * n / r); };
  for (int k : sig.elliptic) add(k);
  for (int r : sig.pseudo_elliptic) add(r);
  for (int k : sig.lox_elliptic) add(k);
  for (int r : sig.lox_pseudo) add(r);
  if (sig.reflections > 0) add(2);
  for (const auto& f : sig.real_schottky) {
    add(2);
    for (int k : f.orders) add(k);
  }
  return g == 1;
}

void require_admissible(const ExtendedSignature& sig) {
  validate_factors(sig);
  if (!condition_one(sig)) {
    throw Error(ErrorKind::ConditionOneFailed, "no orientation-reversing factor: " + to_string(sig));
  }
  if (!condition_two(sig)) {
    throw Error(ErrorKind::ConditionTwoFailed, "gcd of 2n/r is not 1: " + to_string(sig));
  }
}

long long extended_rank(const ExtendedSignature& sig) {
  Rational chi = 0;
  for (int k : sig.elliptic) chi += Rational(1, k);
  for (int r : sig.pseudo_elliptic) chi += Rational(1, r);
  chi += Rational(sig.reflections, 2);
  for (const auto& f : sig.real_schottky) {
    Rational fuchsian = 1 - f.gamma;
    for (int k : f.orders) fuchsian -= 1 - Rational(1, k);
    chi += fuchsian / 2;
  }
  chi -= sig.factor_count() - 1;
  const Rational g = 1 - 2 * sig.n * chi;
  if (g.denominator() != 1) throw Error(ErrorKind::InadmissibleSignature, "non-integral rank");
  return g.numerator();
}

std::string to_string(const ExtendedSignature& sig) {
  std::ostringstream os;
  os << "ext:n=" << sig.n << ",T1=" << sig.glides;
  if (sig.loxodromics > 0) os << ",T1L=" << sig.loxodromics;
  os << ",T2=" << join(sig.elliptic) << ",T3=" << join(sig.pseudo_elliptic)
     << ",T4=" << join(sig.lox_elliptic) << ",T5=" << join(sig.lox_pseudo)
     << ",T6=" << sig.glide_half_turns << ",T7=" << sig.reflections << ",T8=";
  if (sig.real_schottky.empty()) os << "0";
  for (std::size_t i = 0; i < sig.real_schottky.size(); ++i) {
    const auto& f = sig.real_schottky[i];
    os << (i ? "|" : "") << f.gamma << ":" << (f.orders.empty() ? "" : join(f.orders));
  }
  return os.str();
}

ExtendedSignature parse_extended(std::string_view text) {
  if (text.substr(0, 4) != "ext:") throw Error(ErrorKind::ParseError, "extended signature must start with ext:");
  ExtendedSignature sig;
  bool have_n = false;
  for (const auto& [key, value] : key_values(text.substr(4))) {
    if (key == "n") {
      sig.n = parse_int(value);
      have_n = true;
    } else if (key == "T1") {
      sig.glides = parse_int(value);
    } else if (key == "T1L") {
      sig.loxodromics = parse_int(value);
    } else if (key == "T2") {
      sig.elliptic = parse_list(value);
    } else if (key == "T3") {
      sig.pseudo_elliptic = parse_list(value);
    } else if (key == "T4") {
      sig.lox_elliptic = parse_list(value);
    } else if (key == "T5") {
      sig.lox_pseudo = parse_list(value);
    } else if (key == "T6") {
      sig.glide_half_turns = parse_int(value);
    } else if (key == "T7") {
      sig.reflections = parse_int(value);
    } else if (key == "T8") {
      if (value.empty() || value == "0") continue;
      for (std::string_view part : split(value, '|')) {
        RealSchottkyFactor f;
        const std::size_t colon = part.find(':');
        f.gamma = parse_int(part.substr(0, colon));
        if (colon != std::string_view::npos) {
          const std::string_view orders = part.substr(colon + 1);
          if (!orders.empty()) f.orders = parse_list(orders);
        }
        sig.real_schottky.push_back(f);
      }
    } else {
      throw Error(ErrorKind::ParseError, "unknown key " + key);
    }
  }
  if (!have_n) throw Error(ErrorKind::ParseError, "extended signature needs n");
  return canonical(sig);
}

// ---------------------------------------------------------------------------
// Presentations

const char* to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::loxodromic_cyclic: return "LoxodromicCyclic";
    case FactorKind::elliptic_cyclic: return "EllipticCyclic";
    case FactorKind::lox_ell_abelian: return "LoxEllAbelian";
    case FactorKind::glide_cyclic: return "GlideCyclic";
    case FactorKind::pseudo_elliptic_cyclic: return "PseudoEllipticCyclic";
    case FactorKind::lox_pseudo_swap: return "LoxPseudoSwap";
    case FactorKind::glide_half_turn: return "GlideHalfTurn";
    case FactorKind::reflection_cyclic: return "ReflectionCyclic";
    case FactorKind::real_schottky_reflection: return "RealSchottkyReflection";
  }
  return "Unknown";
}

std::vector<FactorSpec> factor_specs(const ConformalSignature& sig) {
  std::vector<FactorSpec> out;
  for (int l : sig.abelian) out.push_back({FactorKind::lox_ell_abelian, l, 0, {}});
  for (int i = 0; i < sig.a; ++i) out.push_back({FactorKind::loxodromic_cyclic, 0, 0, {}});
  for (int k : sig.elliptic) out.push_back({FactorKind::elliptic_cyclic, k, 0, {}});
  return out;
}

std::vector<FactorSpec> factor_specs(const ExtendedSignature& sig) {
  std::vector<FactorSpec> out;
  for (int i = 0; i < sig.glides; ++i) out.push_back({FactorKind::glide_cyclic, 0, 0, {}});
  for (int i = 0; i < sig.loxodromics; ++i) out.push_back({FactorKind::loxodromic_cyclic, 0, 0, {}});
  for (int k : sig.elliptic) out.push_back({FactorKind::elliptic_cyclic, k, 0, {}});
  for (int r : sig.pseudo_elliptic) out.push_back({FactorKind::pseudo_elliptic_cyclic, r, 0, {}});
  for (int k : sig.lox_elliptic) out.push_back({FactorKind::lox_ell_abelian, k, 0, {}});
  for (int r : sig.lox_pseudo) out.push_back({FactorKind::lox_pseudo_swap, r, 0, {}});
  for (int i = 0; i < sig.glide_half_turns; ++i) out.push_back({FactorKind::glide_half_turn, 2, 0, {}});
  for (int i = 0; i < sig.reflections; ++i) out.push_back({FactorKind::reflection_cyclic, 2, 0, {}});
  for (const auto& f : sig.real_schottky) {
    out.push_back({FactorKind::real_schottky_reflection, 2, f.gamma, f.orders});
  }
  return out;
}

std::vector<Generator> factor_generators(const FactorSpec& spec, int factor_index) {
  const std::string tag = std::to_string(factor_index + 1);
  auto gen = [&](const std::string& letter, int order, bool reversing) {
    return Generator{letter + tag, factor_index, order, reversing};
  };
  switch (spec.kind) {
    case FactorKind::loxodromic_cyclic: return {gen("A", 0, false)};
    case FactorKind::elliptic_cyclic: return {gen("E", spec.order, false)};
    case FactorKind::lox_ell_abelian: return {gen("T", 0, false), gen("F", spec.order, false)};
    case FactorKind::glide_cyclic: return {gen("A", 0, true)};
    case FactorKind::pseudo_elliptic_cyclic: return {gen("B", spec.order, true)};
    case FactorKind::lox_pseudo_swap: return {gen("A", 0, false), gen("B", spec.order, true)};
    case FactorKind::glide_half_turn: return {gen("A", 0, true), gen("B", 2, false)};
    case FactorKind::reflection_cyclic: return {gen("R", 2, true)};
    case FactorKind::real_schottky_reflection: {
      std::vector<Generator> out{gen("J", 2, true)};
      for (int i = 0; i < spec.gamma; ++i) {
        out.push_back({"A" + tag + "." + std::to_string(i + 1), factor_index, 0, false});
      }
      for (std::size_t j = 0; j < spec.orders.size(); ++j) {
        out.push_back({"E" + tag + "." + std::to_string(j + 1), factor_index, spec.orders[j], false});
      }
      return out;
    }
  }
  return {};
}

std::vector<Word> factor_relators(const FactorSpec& spec) {
  auto power = [](int letter, int k) { return Word(static_cast<std::size_t>(k), letter); };
  switch (spec.kind) {
    case FactorKind::loxodromic_cyclic:
    case FactorKind::glide_cyclic: return {};
    case FactorKind::elliptic_cyclic:
    case FactorKind::pseudo_elliptic_cyclic:
    case FactorKind::reflection_cyclic: return {power(1, spec.order)};
    case FactorKind::lox_ell_abelian: return {power(2, spec.order), {1, 2, -1, -2}};
    case FactorKind::lox_pseudo_swap: return {power(2, spec.order), {-2, 1, 2, 1}};
    case FactorKind::glide_half_turn: return {power(2, 2), {1, 2, -1, -2}};
    case FactorKind::real_schottky_reflection: {
      std::vector<Word> out{power(1, 2)};
      const int gamma = spec.gamma;
      for (std::size_t j = 0; j < spec.orders.size(); ++j) {
        out.push_back(power(2 + gamma + static_cast<int>(j), spec.orders[j]));
      }
      const int total = 1 + gamma + static_cast<int>(spec.orders.size());
      for (int g = 2; g <= total; ++g) out.push_back({1, g, -1, -g});
      return out;
    }
  }
  return {};
}

Presentation presentation(const std::vector<FactorSpec>& specs) {
  Presentation p;
  for (std::size_t t = 0; t < specs.size(); ++t) {
    const int offset = static_cast<int>(p.generators.size());
    for (Generator& g : factor_generators(specs[t], static_cast<int>(t))) p.generators.push_back(std::move(g));
    for (Word w : factor_relators(specs[t])) {
      for (int& letter : w) letter += letter > 0 ? offset : -offset;
      p.relators.push_back(std::move(w));
    }
  }
  return p;
}

Presentation presentation(const ConformalSignature& sig) { return presentation(factor_specs(sig)); }

Presentation presentation(const ExtendedSignature& sig) { return presentation(factor_specs(sig)); }

}  // namespace zns
