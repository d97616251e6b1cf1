#include "zns/epimorphisms.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include <boost/rational.hpp>

#include "zns/error.hpp"
#include "zns/factors.hpp"

namespace zns {

namespace {

int mod(long long x, int n) {
  const long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int additive_order(int e, int n) { return n / std::gcd(mod(e, n), n); }

struct TorsionWord {
  Word word;
  int order;
};

// Finite-order representatives of every factor, in global letters.
std::vector<TorsionWord> torsion_words(const std::vector<FactorSpec>& specs) {
  std::vector<TorsionWord> out;
  int offset = 0;
  for (std::size_t t = 0; t < specs.size(); ++t) {
    const FactorGroup f = build_standard_factor(specs[t], 0);
    for (const TorsionElement& e : f.torsion) {
      Word w = e.word;
      for (int& letter : w) letter += letter > 0 ? offset : -offset;
      out.push_back({w, e.order});
    }
    offset += static_cast<int>(f.generators.size());
  }
  return out;
}

struct Checker {
  int modulus;
  bool extended;
  Presentation presentation;
  std::vector<TorsionWord> torsion;

  Checker(const std::vector<FactorSpec>& specs, int n, bool ext)
      : modulus(n), extended(ext), presentation(zns::presentation(specs)), torsion(torsion_words(specs)) {}

  long long value(const Word& w, const std::vector<int>& e) const {
    long long v = 0;
    for (int letter : w) {
      const int x = e[static_cast<std::size_t>(std::abs(letter) - 1)];
      v += letter > 0 ? x : -x;
    }
    return v;
  }

  KernelReport report(const std::vector<int>& e) const {
    KernelReport r;
    r.well_defined = std::all_of(presentation.relators.begin(), presentation.relators.end(),
                                 [&](const Word& w) { return mod(value(w, e), modulus) == 0; });
    int g = modulus;
    for (int x : e) g = std::gcd(g, mod(x, modulus));
    r.surjective = g == 1;
    r.torsion_free = std::all_of(torsion.begin(), torsion.end(), [&](const TorsionWord& t) {
      return additive_order(static_cast<int>(mod(value(t.word, e), modulus)), modulus) == t.order;
    });
    if (extended) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        const bool odd = mod(e[i], 2) == 1;
        if (odd != presentation.generators[i].reversing) r.orientation_ok = false;
      }
    }
    return r;
  }

  bool search(int cap, int n) const {
    const std::size_t count = presentation.generators.size();
    if (n > cap || count > 8) {
      throw Error(ErrorKind::SearchSpaceTooLarge,
                  "n=" + std::to_string(n) + " with " + std::to_string(count) + " generators");
    }
    double space = 1.0;
    for (std::size_t i = 0; i < count; ++i) space *= modulus;
    if (space > 1e8) throw Error(ErrorKind::SearchSpaceTooLarge, "more than 10^8 assignments");
    std::vector<int> e(count, 0);
    while (true) {
      if (report(e).ok()) return true;
      std::size_t i = 0;
      while (i < count && ++e[i] == modulus) e[i++] = 0;
      if (i == count) return false;
    }
  }
};

Checker checker(const ConformalSignature& sig) { return {factor_specs(sig), sig.n, false}; }
Checker checker(const ExtendedSignature& sig) { return {factor_specs(sig), 2 * sig.n, true}; }

Epimorphism wrap(const Checker& c, std::vector<int> exponents) {
  if (exponents.size() != c.presentation.generators.size()) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(c.presentation.generators.size()) +
                                           " exponents, got " + std::to_string(exponents.size()));
  }
  Epimorphism phi;
  phi.modulus = c.modulus;
  phi.presentation = c.presentation;
  for (int& x : exponents) x = mod(x, c.modulus);
  phi.exponents = std::move(exponents);
  return phi;
}

// ---------------------------------------------------------------------------
// Tietze elimination on lifted relators

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

void free_reduce(Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  w.assign(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word substitute(const Word& w, int gen, const Word& image) {
  Word out;
  const Word inv = inverse(image);
  for (int x : w) {
    if (std::abs(x) != gen) {
      out.push_back(x);
    } else {
      const Word& piece = x > 0 ? image : inv;
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
  return out;
}

}  // namespace

int Epimorphism::value(const Word& w) const {
  long long v = 0;
  for (int letter : w) {
    const int x = exponents[static_cast<std::size_t>(std::abs(letter) - 1)];
    v += letter > 0 ? x : -x;
  }
  return mod(v, modulus);
}

Epimorphism build_conformal_epi(const ConformalSignature& sig) {
  validate_orders(sig);
  if (sig.m() == 0 && sig.a == 0) {
    int g = 0;
    for (int k : sig.elliptic) g = std::gcd(g, sig.n / k);
    if (g != 1) {
      throw Error(ErrorKind::GcdConditionFailed, "gcd(n/n_j) = " + std::to_string(g) + " for " + to_string(sig));
    }
  }
  const Checker c = checker(sig);
  std::vector<int> e;
  bool unit_given = false;
  for (const FactorSpec& spec : factor_specs(sig)) {
    switch (spec.kind) {
      case FactorKind::lox_ell_abelian:
        // T_k, F_k; the first T carries the unit only when there is no A
        e.push_back(!unit_given && sig.a == 0 ? 1 : 0);
        unit_given = unit_given || sig.a == 0;
        e.push_back(sig.n / spec.order);
        break;
      case FactorKind::loxodromic_cyclic:
        e.push_back(unit_given ? 0 : 1);
        unit_given = true;
        break;
      case FactorKind::elliptic_cyclic: e.push_back(sig.n / spec.order); break;
      default: break;
    }
  }
  return wrap(c, std::move(e));
}

Epimorphism build_extended_epi(const ExtendedSignature& sig) {
  require_admissible(sig);
  const int n = sig.n;
  const Checker c = checker(sig);
  std::vector<int> e;
  for (const FactorSpec& spec : factor_specs(sig)) {
    switch (spec.kind) {
      case FactorKind::glide_cyclic: e.push_back(1); break;
      case FactorKind::loxodromic_cyclic: e.push_back(0); break;
      case FactorKind::elliptic_cyclic: e.push_back(2 * n / spec.order); break;
      case FactorKind::pseudo_elliptic_cyclic: e.push_back(2 * n / spec.order); break;
      case FactorKind::lox_ell_abelian:
        e.push_back(0);
        e.push_back(2 * n / spec.order);
        break;
      case FactorKind::lox_pseudo_swap:
        e.push_back(0);
        e.push_back(2 * n / spec.order);
        break;
      case FactorKind::glide_half_turn:
        e.push_back(1);
        e.push_back(n);
        break;
      case FactorKind::reflection_cyclic: e.push_back(n); break;
      case FactorKind::real_schottky_reflection:
        // J odd of order 2; pairings even; with n odd, gcd(n, 2) = 1 gives the unit
        e.push_back(n);
        for (int i = 0; i < spec.gamma; ++i) e.push_back(2);
        for (int k : spec.orders) e.push_back(2 * n / k);
        break;
    }
  }
  return wrap(c, std::move(e));
}

Epimorphism make_epi(const ConformalSignature& sig, std::vector<int> exponents) {
  return wrap(checker(sig), std::move(exponents));
}

Epimorphism make_epi(const ExtendedSignature& sig, std::vector<int> exponents) {
  return wrap(checker(sig), std::move(exponents));
}

KernelReport verify_epi(const ConformalSignature& sig, const Epimorphism& phi) {
  KernelReport r = checker(sig).report(phi.exponents);
  if (r.ok()) r.rank = kernel_rank(sig);
  return r;
}

KernelReport verify_epi(const ExtendedSignature& sig, const Epimorphism& phi) {
  KernelReport r = checker(sig).report(phi.exponents);
  if (r.ok()) r.rank = extended_rank(sig);
  return r;
}

bool exists_epi_bruteforce(const ConformalSignature& sig, int cap) {
  validate_orders(sig);
  return checker(sig).search(cap, sig.n);
}

bool exists_epi_bruteforce(const ExtendedSignature& sig, int cap) {
  validate_factors(sig);
  return checker(sig).search(cap, sig.n);
}

long long kernel_rank(const ConformalSignature& sig) {
  require_admissible(sig);
  return conformal_rank(sig);
}

long long euler_rank(const ConformalSignature& sig) {
  using Q = boost::rational<long long>;
  Q chi = 0;
  long long factors = 0;
  for (const FactorSpec& spec : factor_specs(sig)) {
    ++factors;
    if (spec.kind == FactorKind::elliptic_cyclic) chi += Q(1, spec.order);
  }
  chi -= factors - 1;
  const Q g = Q(1) - Q(sig.n) * chi;
  return boost::rational_cast<long long>(g);
}

std::optional<long long> kernel_rank_schreier(const Epimorphism& phi) {
  const int N = phi.modulus;
  const int r = static_cast<int>(phi.presentation.generators.size());
  int g = N;
  for (int x : phi.exponents) g = std::gcd(g, x);
  if (g != 1) return std::nullopt;

  auto id = [&](int coset, int gen) { return coset * r + gen + 1; };
  std::vector<bool> tree(static_cast<std::size_t>(N * r + 1), false);
  std::vector<bool> seen(static_cast<std::size_t>(N), false);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop();
    for (int x = 0; x < r; ++x) {
      const int next = mod(c + phi.exponents[static_cast<std::size_t>(x)], N);
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        tree[static_cast<std::size_t>(id(c, x))] = true;
        queue.push(next);
      }
    }
  }

  std::vector<Word> relators;
  for (const Word& rel : phi.presentation.relators) {
    for (int c0 = 0; c0 < N; ++c0) {
      Word lifted;
      int c = c0;
      for (int letter : rel) {
        const int x = std::abs(letter) - 1;
        const int e = phi.exponents[static_cast<std::size_t>(x)];
        if (letter > 0) {
          if (!tree[static_cast<std::size_t>(id(c, x))]) lifted.push_back(id(c, x));
          c = mod(c + e, N);
        } else {
          c = mod(c - e, N);
          if (!tree[static_cast<std::size_t>(id(c, x))]) lifted.push_back(-id(c, x));
        }
      }
      relators.push_back(std::move(lifted));
    }
  }

  long long alive = static_cast<long long>(N) * r - (N - 1);
  while (true) {
    std::vector<Word> kept;
    for (Word& w : relators) {
      free_reduce(w);
      if (!w.empty()) kept.push_back(std::move(w));
    }
    relators = std::move(kept);
    if (relators.empty()) return alive;

    bool eliminated = false;
    for (std::size_t i = 0; i < relators.size() && !eliminated; ++i) {
      const Word& w = relators[i];
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        const int gen = std::abs(w[pos]);
        const auto occurrences = std::count_if(w.begin(), w.end(), [&](int x) { return std::abs(x) == gen; });
        if (occurrences != 1) continue;
        const Word U(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        const Word V(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
        Word image;
        if (w[pos] > 0) {  // U x V = 1 gives x = U⁻¹V⁻¹
          image = inverse(U);
          const Word vi = inverse(V);
          image.insert(image.end(), vi.begin(), vi.end());
        } else {  // U x⁻¹ V = 1 gives x = V U
          image = V;
          image.insert(image.end(), U.begin(), U.end());
        }
        relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(i));
        for (Word& other : relators) other = substitute(other, gen, image);
        --alive;
        eliminated = true;
        break;
      }
    }
    if (!eliminated) return std::nullopt;
  }
}

long long rank_extended_schottky(int a, int b, int c, int d, int e, const std::vector<int>& gamma) {
  if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0) {
    throw Error(ErrorKind::InadmissibleSignature, "negative factor count");
  }
  if (a + b + c + e == 0) {
    throw Error(ErrorKind::HalfTurnConditionFailed, "no reflection, imaginary reflection, glide or real Schottky factor");
  }
  if (static_cast<int>(gamma.size()) != e || std::any_of(gamma.begin(), gamma.end(), [](int x) { return x < 1; })) {
    throw Error(ErrorKind::InadmissibleSignature, "need one rank γ_j ≥ 1 per real Schottky factor");
  }
  return a + b + 2LL * c + 2LL * d + e - 1 + std::accumulate(gamma.begin(), gamma.end(), 0LL);
}

}  // namespace zns
