#include "zns/factors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "zns/error.hpp"

namespace zns {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kSlot = 2.0;  // spacing of the pieces of a real Schottky factor
constexpr double kPieceRadius = 0.45;

struct Standard {
  std::vector<Mobius> gens;
  std::vector<Region> core;
  ComplexPoint pole;
};

// Complement of the sector {|arg z − π| < π/k}: the fundamental domain of z ↦ e^{2πi/k}z
// is the sector around the negative real axis.
Region sector_complement(int k) {
  if (k == 2) return Region::disc(Circle::half_plane(0.0, cplx{0.0, 1.0}), cplx{1.0, 0.0});
  const cplx e = std::polar(1.0, pi / k);
  return Region::lens(Circle::half_plane(0.0, e), Circle::half_plane(0.0, -std::conj(e)), true,
                      cplx{1.0, 0.0});
}

Mobius rotation(int k) {
  const cplx e = std::polar(1.0, pi / k);
  return {e, 0.0, 0.0, std::conj(e)};
}

// z ↦ e^{iπ/d} μ / z̄, order 2d
Mobius pseudo_elliptic(int d, double mu) {
  return {0.0, std::polar(mu, pi / d), 1.0, 0.0, Orientation::reversing};
}

// Rotation by 2π/k about p in the upper half-plane, with real coefficients.
Mobius real_elliptic(cplx p, int k) {
  const Mobius to_disc(1.0, -p, 1.0, -std::conj(p));
  const Mobius r = to_disc.inverse() * rotation(k) * to_disc;
  return {r.a().real(), r.b().real(), r.c().real(), r.d().real()};
}

void add_annulus(std::vector<Region>& core, double inner, double outer) {
  core.push_back(Region::disc(Circle::round(0.0, inner)));
  core.push_back(Region::disc(Circle::exterior(0.0, outer)));
}

Standard standard_position(const FactorSpec& spec, const FactorParams& params) {
  const double lambda = params.lambda;
  const double mu = params.mu;
  const double root = std::sqrt(lambda);
  Standard s;
  s.pole = cplx{-1.0, 0.0};
  switch (spec.kind) {
    case FactorKind::loxodromic_cyclic:
      s.gens = {Mobius(lambda, 0.0, 0.0, 1.0)};
      add_annulus(s.core, 1.0 / root, root);
      break;
    case FactorKind::glide_cyclic:
      s.gens = {Mobius(lambda, 0.0, 0.0, 1.0, Orientation::reversing)};
      add_annulus(s.core, 1.0 / root, root);
      break;
    case FactorKind::elliptic_cyclic:
      s.gens = {rotation(spec.order)};
      s.core = {sector_complement(spec.order)};
      break;
    case FactorKind::lox_ell_abelian:
      s.gens = {Mobius(lambda, 0.0, 0.0, 1.0), rotation(spec.order)};
      add_annulus(s.core, 1.0 / root, root);
      s.core.push_back(sector_complement(spec.order));
      break;
    case FactorKind::pseudo_elliptic_cyclic: {
      const int d = spec.order / 2;
      s.gens = {pseudo_elliptic(d, mu)};
      s.core.push_back(Region::disc(Circle::round(0.0, std::sqrt(mu))));
      if (d >= 2) s.core.push_back(sector_complement(d));
      s.pole = cplx{-2.0 * std::sqrt(mu), 0.0};
      break;
    }
    case FactorKind::lox_pseudo_swap: {
      const int d = spec.order / 2;
      s.gens = {Mobius(lambda, 0.0, 0.0, 1.0), pseudo_elliptic(d, mu)};
      add_annulus(s.core, std::sqrt(mu), std::sqrt(mu * lambda));
      if (d >= 2) s.core.push_back(sector_complement(d));
      s.pole = cplx{-std::sqrt(mu) * std::sqrt(root), 0.0};
      break;
    }
    case FactorKind::glide_half_turn:
      s.gens = {Mobius(lambda, 0.0, 0.0, 1.0, Orientation::reversing), Mobius(cplx{0, 1}, 0.0, 0.0, cplx{0, -1})};
      add_annulus(s.core, 1.0 / root, root);
      s.core.push_back(sector_complement(2));
      break;
    case FactorKind::reflection_cyclic:
      s.gens = {Mobius(0.0, 1.0, 1.0, 0.0, Orientation::reversing)};
      s.core = {Region::disc(Circle::round(0.0, 1.0))};
      s.pole = cplx{-2.0, 0.0};
      break;
    case FactorKind::real_schottky_reflection: {
      // J = z̄ with the lower half-plane; hyperbolic pairings and real elliptics sit
      // in slots along the real axis.
      s.gens = {Mobius::conjugation()};
      s.core = {Region::disc(Circle::half_plane(0.0, 1.0), cplx{0.0, -1.0})};
      const int slots = 2 * spec.gamma + static_cast<int>(spec.orders.size());
      const double first = -kSlot * (slots - 1) / 2.0;
      int slot = 0;
      for (int i = 0; i < spec.gamma; ++i) {
        const double x1 = first + kSlot * slot++, x2 = first + kSlot * slot++, r = kPieceRadius;
        s.gens.emplace_back(x2, -x1 * x2 - r * r, 1.0, -x1);
        s.core.push_back(Region::disc(Circle::round(x1, r)));
        s.core.push_back(Region::disc(Circle::round(x2, r)));
      }
      for (int k : spec.orders) {
        const double x = first + kSlot * slot++;
        const double radius = kPieceRadius;
        const double t = radius * std::sin(pi / k), offset = radius * std::cos(pi / k);
        const cplx p{x, t};
        s.gens.push_back(real_elliptic(p, k));
        s.core.push_back(Region::lens(Circle::round(x - offset, radius), Circle::round(x + offset, radius),
                                      true, cplx{x, 0.0}));
      }
      s.pole = cplx{0.0, kSlot * slots / 2.0 + 2.0};
      break;
    }
  }
  return s;
}

void check_arithmetic(const FactorSpec& spec, int n) {
  if (n <= 0) return;
  auto divides = [](int d, int m) { return d != 0 && m % d == 0; };
  auto fail = [&](int r) {
    throw Error(ErrorKind::OrderNotDividing,
                std::string(to_string(spec.kind)) + " order " + std::to_string(r) + " for n=" + std::to_string(n));
  };
  switch (spec.kind) {
    case FactorKind::elliptic_cyclic:
    case FactorKind::lox_ell_abelian:
      if (spec.order < 2 || !divides(spec.order, n)) fail(spec.order);
      break;
    case FactorKind::pseudo_elliptic_cyclic:
    case FactorKind::lox_pseudo_swap:
      if (spec.order < 2 || spec.order % 2 != 0 || !divides(spec.order / 2, n) || divides(spec.order, n)) {
        fail(spec.order);
      }
      break;
    case FactorKind::glide_half_turn:
      if (n % 2 != 0) throw Error(ErrorKind::InvalidKindForParity, "GlideHalfTurn needs n even");
      break;
    case FactorKind::reflection_cyclic:
      if (n % 2 == 0) throw Error(ErrorKind::InvalidKindForParity, "ReflectionCyclic needs n odd");
      break;
    case FactorKind::real_schottky_reflection:
      if (n % 2 == 0) throw Error(ErrorKind::InvalidKindForParity, "RealSchottkyReflection needs n odd");
      for (int k : spec.orders) {
        if (k < 2 || !divides(k, n)) fail(k);
      }
      break;
    default: break;
  }
}

Mobius evaluate(const Word& w, const std::vector<Mobius>& maps) {
  Mobius out;
  for (int letter : w) {
    const Mobius& g = maps[static_cast<std::size_t>(std::abs(letter) - 1)];
    out = out * (letter > 0 ? g : g.inverse());
  }
  return out;
}

Word power_word(int letter, int e) {
  return Word(static_cast<std::size_t>(std::abs(e)), e >= 0 ? letter : -letter);
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int cyclic_rep(int s, int order) { return 2 * s <= order ? s : s - order; }

// Nontrivial powers of one generator, minimal exponent representative for finite order.
std::vector<Syllable> cyclic_syllables(int letter, int order, const Mobius& g, int max_len) {
  std::vector<Syllable> out;
  if (order == 0) {
    for (int e = 1; e <= max_len; ++e) {
      out.push_back({power_word(letter, e), g.pow(e), e});
      out.push_back({power_word(letter, -e), g.pow(-e), e});
    }
    return out;
  }
  for (int s = 1; s < order; ++s) {
    const int rep = cyclic_rep(s, order);
    if (std::abs(rep) > max_len) continue;
    out.push_back({power_word(letter, rep), g.pow(rep), std::abs(rep)});
  }
  return out;
}

// Normal forms x^i y^s of Z × Z_k and of the semidirect products.
std::vector<Syllable> product_syllables(const std::vector<Mobius>& maps, int order, int max_len) {
  std::vector<Syllable> out;
  for (int i = -max_len; i <= max_len; ++i) {
    for (int s = 0; s < order; ++s) {
      if (i == 0 && s == 0) continue;
      const int rep = cyclic_rep(s, order);
      const int len = std::abs(i) + std::abs(rep);
      if (len > max_len) continue;
      out.push_back({concat(power_word(1, i), power_word(2, rep)), maps[0].pow(i) * maps[1].pow(rep), len});
    }
  }
  return out;
}

void dfs_words(const std::vector<std::vector<Syllable>>& pieces, const Syllable& prefix, int last,
               int remaining, std::vector<Syllable>& out) {
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    if (static_cast<int>(p) == last) continue;
    for (const Syllable& s : pieces[p]) {
      if (s.length > remaining) continue;
      Syllable next{concat(prefix.word, s.word), prefix.map * s.map, prefix.length + s.length};
      out.push_back(next);
      dfs_words(pieces, next, static_cast<int>(p), remaining - s.length, out);
    }
  }
}

std::vector<long long> cyclic_growth(int order, int max_len) {
  std::vector<long long> c(static_cast<std::size_t>(max_len + 1), 0);
  for (int l = 1; l <= max_len; ++l) {
    if (order == 0 || 2 * l < order) {
      c[l] = 2;
    } else if (2 * l == order) {
      c[l] = 1;
    }
  }
  return c;
}

// (1 + x)(1 + y) − 1 truncated
std::vector<long long> product_growth(const std::vector<long long>& x, const std::vector<long long>& y) {
  const std::size_t len = x.size();
  std::vector<long long> out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; i + j < len; ++j) {
      const long long xi = i == 0 ? 1 : x[i];
      const long long yj = j == 0 ? 1 : y[j];
      out[i + j] += xi * yj;
    }
  }
  out[0] = 0;
  return out;
}

}  // namespace

std::vector<Syllable> free_product_words(const std::vector<std::vector<Syllable>>& pieces, int max_len) {
  std::vector<Syllable> out;
  dfs_words(pieces, Syllable{}, -1, max_len, out);
  return out;
}

FactorGroup build_standard_factor(const FactorSpec& spec, int n, const FactorParams& params) {
  check_arithmetic(spec, n);
  Standard s = standard_position(spec, params);
  FactorGroup f;
  f.spec = spec;
  f.generators = factor_generators(spec, 0);
  f.standard_generators = s.gens;
  f.maps = s.gens;
  f.core = s.core;
  f.center = cplx{0.0, 0.0};
  f.torsion = enumerate_torsion(f);
  return f;
}

FactorGroup build_factor(const FactorSpec& spec, int n, const ComplexPoint& center, double radius,
                         const FactorParams& params) {
  if (!(radius > 0.0) || center.is_infinite()) {
    throw Error(ErrorKind::PlacementFailure, "localization disc needs a finite center and positive radius");
  }
  check_arithmetic(spec, n);
  const Standard s = standard_position(spec, params);
  const Mobius to_infinity(0.0, 1.0, 1.0, -s.pole.value());

  std::vector<Region> moved;
  double lo_x = HUGE_VAL, hi_x = -HUGE_VAL, lo_y = HUGE_VAL, hi_y = -HUGE_VAL;
  for (const Region& r : s.core) {
    moved.push_back(r.transformed(to_infinity));
    for (const Circle& c : moved.back().parts()) {
      if (c.is_line() || c.A() <= 0.0) {
        throw Error(ErrorKind::PlacementFailure, "pole is not outside the envelope");
      }
      const cplx z = c.center();
      const double rr = c.radius();
      lo_x = std::min(lo_x, z.real() - rr);
      hi_x = std::max(hi_x, z.real() + rr);
      lo_y = std::min(lo_y, z.imag() - rr);
      hi_y = std::max(hi_y, z.imag() + rr);
    }
  }
  const cplx mid{(lo_x + hi_x) / 2.0, (lo_y + hi_y) / 2.0};
  double reach = 0.0;
  for (const Region& r : moved) {
    for (const Circle& c : r.parts()) reach = std::max(reach, std::abs(c.center() - mid) + c.radius());
  }
  const double scale = 0.9 * radius / reach;
  const Mobius fit = affine(scale, center.value() - scale * mid);

  FactorGroup f;
  f.spec = spec;
  f.generators = factor_generators(spec, 0);
  f.standard_generators = s.gens;
  f.conjugator = fit * to_infinity;
  const Mobius inv = f.conjugator.inverse();
  for (const Mobius& g : s.gens) f.maps.push_back(f.conjugator * g * inv);
  for (const Region& r : moved) f.core.push_back(r.transformed(fit));
  f.center = center;
  f.radius = radius;
  f.torsion = enumerate_torsion(f);
  return f;
}

const std::vector<Region>& factor_envelope(const FactorGroup& f) { return f.core; }

std::vector<TorsionElement> enumerate_torsion(const FactorGroup& f) {
  std::vector<TorsionElement> out;
  auto add = [&](Word w, int order) {
    const Mobius m = evaluate(w, f.maps);
    out.push_back({std::move(w), m, order});
  };
  const FactorSpec& spec = f.spec;
  switch (spec.kind) {
    case FactorKind::loxodromic_cyclic:
    case FactorKind::glide_cyclic: break;
    case FactorKind::elliptic_cyclic:
    case FactorKind::pseudo_elliptic_cyclic:
    case FactorKind::reflection_cyclic:
      for (int s = 1; s < spec.order; ++s) add(power_word(1, s), spec.order / std::gcd(s, spec.order));
      break;
    case FactorKind::lox_ell_abelian:
      for (int s = 1; s < spec.order; ++s) add(power_word(2, s), spec.order / std::gcd(s, spec.order));
      break;
    case FactorKind::lox_pseudo_swap: {
      const int r = spec.order, d = r / 2;
      for (int s = 1; s < r; ++s) add(power_word(2, s), r / std::gcd(s, r));
      for (int s = 1; s < r; s += 2) add(concat({1}, power_word(2, s)), 2 * d / std::gcd(s, d));
      break;
    }
    case FactorKind::glide_half_turn: add({2}, 2); break;
    case FactorKind::real_schottky_reflection: {
      add({1}, 2);
      for (std::size_t j = 0; j < spec.orders.size(); ++j) {
        const int k = spec.orders[j];
        const int letter = 2 + spec.gamma + static_cast<int>(j);
        for (int s = 1; s < k; ++s) {
          const int order = k / std::gcd(s, k);
          add(power_word(letter, s), order);
          add(concat({1}, power_word(letter, s)), std::lcm(2, order));
        }
      }
      break;
    }
  }
  return out;
}

double relation_residual(const FactorGroup& f) {
  double worst = 0.0;
  for (const Word& w : factor_relators(f.spec)) {
    worst = std::max(worst, matrix_distance(evaluate(w, f.maps), Mobius::identity()));
  }
  return worst;
}

double envelope_distance(const std::vector<Region>& core, const ComplexPoint& z) {
  double out = HUGE_VAL;
  for (const Region& r : core) out = std::min(out, r.signed_distance(z));
  return out;
}

std::vector<Syllable> factor_elements(const FactorGroup& f, int max_len) {
  const FactorSpec& spec = f.spec;
  switch (spec.kind) {
    case FactorKind::loxodromic_cyclic:
    case FactorKind::glide_cyclic: return cyclic_syllables(1, 0, f.maps[0], max_len);
    case FactorKind::elliptic_cyclic:
    case FactorKind::pseudo_elliptic_cyclic:
    case FactorKind::reflection_cyclic: return cyclic_syllables(1, spec.order, f.maps[0], max_len);
    case FactorKind::lox_ell_abelian:
    case FactorKind::lox_pseudo_swap:
    case FactorKind::glide_half_turn: return product_syllables(f.maps, spec.order, max_len);
    case FactorKind::real_schottky_reflection: {
      std::vector<std::vector<Syllable>> pieces;
      for (int i = 0; i < spec.gamma; ++i) {
        pieces.push_back(cyclic_syllables(2 + i, 0, f.maps[static_cast<std::size_t>(1 + i)], max_len));
      }
      for (std::size_t j = 0; j < spec.orders.size(); ++j) {
        const std::size_t idx = 1 + static_cast<std::size_t>(spec.gamma) + j;
        pieces.push_back(cyclic_syllables(static_cast<int>(idx) + 1, spec.orders[j], f.maps[idx], max_len));
      }
      const std::vector<Syllable> inner = free_product_words(pieces, max_len);
      std::vector<Syllable> out;
      out.push_back({{1}, f.maps[0], 1});
      for (const Syllable& w : inner) {
        out.push_back(w);
        if (w.length + 1 <= max_len) out.push_back({concat({1}, w.word), f.maps[0] * w.map, w.length + 1});
      }
      return out;
    }
  }
  return {};
}

std::vector<long long> factor_growth(const FactorSpec& spec, int max_len) {
  switch (spec.kind) {
    case FactorKind::loxodromic_cyclic:
    case FactorKind::glide_cyclic: return cyclic_growth(0, max_len);
    case FactorKind::elliptic_cyclic:
    case FactorKind::pseudo_elliptic_cyclic:
    case FactorKind::reflection_cyclic: return cyclic_growth(spec.order, max_len);
    case FactorKind::lox_ell_abelian:
    case FactorKind::lox_pseudo_swap:
    case FactorKind::glide_half_turn:
      return product_growth(cyclic_growth(0, max_len), cyclic_growth(spec.order, max_len));
    case FactorKind::real_schottky_reflection: {
      std::vector<std::vector<long long>> pieces;
      for (int i = 0; i < spec.gamma; ++i) pieces.push_back(cyclic_growth(0, max_len));
      for (int k : spec.orders) pieces.push_back(cyclic_growth(k, max_len));
      return product_growth(cyclic_growth(2, max_len), free_product_growth(pieces, max_len));
    }
  }
  return {};
}

std::vector<long long> free_product_growth(const std::vector<std::vector<long long>>& pieces, int max_len) {
  const std::size_t len = static_cast<std::size_t>(max_len + 1);
  std::vector<std::vector<long long>> ending(pieces.size(), std::vector<long long>(len, 0));
  std::vector<long long> total(len, 0);
  for (std::size_t l = 1; l < len; ++l) {
    for (std::size_t f = 0; f < pieces.size(); ++f) {
      long long count = 0;
      for (std::size_t step = 1; step <= l; ++step) {
        const long long c = pieces[f][step];
        if (c == 0) continue;
        long long before = step == l ? 1 : 0;
        for (std::size_t g = 0; g < pieces.size(); ++g) {
          if (g != f) before += ending[g][l - step];
        }
        count += c * before;
      }
      ending[f][l] = count;
      total[l] += count;
    }
  }
  return total;
}

std::string word_to_string(const Word& w, const std::vector<Generator>& generators) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int letter = w[i];
    const int e = static_cast<int>(j - i) * (letter > 0 ? 1 : -1);
    os << (first ? "" : " ") << generators[static_cast<std::size_t>(std::abs(letter) - 1)].name;
    if (e != 1) os << "^" << e;
    first = false;
    i = j;
  }
  return os.str();
}

}  // namespace zns
