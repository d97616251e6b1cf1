#pragma once

// Surjections of a (extended) Z_n-Schottky group onto Z_n (Z_2n) with torsion-free,
// orientation-preserving kernel, and the rank of that kernel by three routes.

#include <optional>
#include <vector>

#include "zns/signature.hpp"

namespace zns {

/// Exponents in the additive group Z_N, one per generator of the presentation.
struct Epimorphism {
  int modulus = 1;
  Presentation presentation;
  std::vector<int> exponents;

  /// Φ of a word, reduced to [0, N).
  int value(const Word& w) const;
};

struct KernelReport {
  bool well_defined = false;   // every relator maps to 0
  bool surjective = false;
  bool torsion_free = false;
  bool orientation_ok = true;  // extended only: reversing generators ↦ odd exponents
  std::optional<long long> rank;

  bool ok() const { return well_defined && surjective && torsion_free && orientation_ok; }
};

/// Throws GcdConditionFailed (or the admissibility errors of the signature).
Epimorphism build_conformal_epi(const ConformalSignature& sig);
/// Target Z_2n. Throws ConditionOneFailed / ConditionTwoFailed.
Epimorphism build_extended_epi(const ExtendedSignature& sig);

/// An epimorphism with explicit exponents over the signature's presentation.
Epimorphism make_epi(const ConformalSignature& sig, std::vector<int> exponents);
Epimorphism make_epi(const ExtendedSignature& sig, std::vector<int> exponents);

KernelReport verify_epi(const ConformalSignature& sig, const Epimorphism& phi);
KernelReport verify_epi(const ExtendedSignature& sig, const Epimorphism& phi);

/// Exhaustive search over all exponent assignments. Throws SearchSpaceTooLarge when
/// n > cap, there are more than 8 generators, or the search exceeds 10^8 assignments.
bool exists_epi_bruteforce(const ConformalSignature& sig, int cap = 12);
bool exists_epi_bruteforce(const ExtendedSignature& sig, int cap = 12);

/// g = n(m + a − 1) + 1 + Σ (n/n_j)(n_j − 1) for an admissible signature.
long long kernel_rank(const ConformalSignature& sig);
/// 1 − N·χ(K), χ(K) the rational Euler characteristic of the free product.
long long euler_rank(const ConformalSignature& sig);

/// Free rank of the kernel by Reidemeister–Schreier on the N cosets and Tietze
/// elimination; nullopt when the lifted relators cannot be eliminated one by one.
std::optional<long long> kernel_rank_schreier(const Epimorphism& phi);

/// g = a + b + 2c + 2d + e − 1 + Σ γ_j for a reflections, b imaginary reflections,
/// c glide-reflections, d loxodromics and e real Schottky groups of ranks γ_j.
/// Throws HalfTurnConditionFailed when a + b + c + e = 0.
long long rank_extended_schottky(int a, int b, int c, int d, int e, const std::vector<int>& gamma);

}  // namespace zns
