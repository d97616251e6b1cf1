#pragma once

// Signatures naming topological types of (extended) Z_n-Schottky groups, and the
// abstract free-product presentations they determine.

#include <string>
#include <string_view>
#include <vector>

namespace zns {

/// (m, a, b, n_1..n_b, l_1..l_m); m and b are the list lengths.
struct ConformalSignature {
  int n = 2;
  int a = 0;
  std::vector<int> elliptic;  // n_1 ≤ … ≤ n_b
  std::vector<int> abelian;   // l_1 ≤ … ≤ l_m

  int m() const { return static_cast<int>(abelian.size()); }
  int b() const { return static_cast<int>(elliptic.size()); }
  int gamma() const { return a + m(); }

  friend bool operator==(const ConformalSignature&, const ConformalSignature&) = default;
};

/// Census order: by (m, a, b, elliptic orders, abelian orders).
bool canonical_less(const ConformalSignature& x, const ConformalSignature& y);

/// Sorts both order lists.
ConformalSignature canonical(ConformalSignature sig);

/// Orders are divisors of n and at least 2; throws OrderNotDividing otherwise.
void validate_orders(const ConformalSignature& sig);

/// m + a > 0, or m = a = 0 and gcd(n/n_1, …, n/n_b) = 1.
bool admissible(const ConformalSignature& sig);
/// Throws InadmissibleSignature (or OrderNotDividing) when not admissible.
void require_admissible(const ConformalSignature& sig);

/// g = n(m + a − 1) + 1 + Σ (n/n_j)(n_j − 1).
long long conformal_rank(const ConformalSignature& sig);

/// "m=1,a=0,b=2;5,l=5"
std::string to_string(const ConformalSignature& sig);

/// Grammar: m=<int>,a=<int>,b=<k1;k2;…>,l=<k1;…>. "b=0" is the empty list, tokens
/// without a key continue the previous list, and a missing l gives m copies of n.
ConformalSignature parse_conformal(std::string_view text, int n);

struct RealSchottkyFactor {
  int gamma = 0;            // loxodromic (hyperbolic) pairings
  std::vector<int> orders;  // real elliptic cone orders

  friend bool operator==(const RealSchottkyFactor&, const RealSchottkyFactor&) = default;
};

struct ExtendedSignature {
  int n = 1;
  int glides = 0;                    // T1, glide-reflection generator
  int loxodromics = 0;               // T1, loxodromic generator
  std::vector<int> elliptic;         // T2: order k | n
  std::vector<int> pseudo_elliptic;  // T3: order 2d, d | n, 2d ∤ n
  std::vector<int> lox_elliptic;     // T4: order k | n
  std::vector<int> lox_pseudo;       // T5: order 2d, d | n, 2d ∤ n
  int glide_half_turns = 0;          // T6, n even
  int reflections = 0;               // T7, n odd
  std::vector<RealSchottkyFactor> real_schottky;  // T8, n odd

  int factor_count() const;

  friend bool operator==(const ExtendedSignature&, const ExtendedSignature&) = default;
};

ExtendedSignature canonical(ExtendedSignature sig);

/// Order and parity side conditions of each factor kind; throws OrderNotDividing or
/// InvalidKindForParity.
void validate_factors(const ExtendedSignature& sig);
/// Some factor carries orientation-reversing elements.
bool condition_one(const ExtendedSignature& sig);
/// The gcd condition on 2n/r, or a factor supplying an odd generator of infinite order.
bool condition_two(const ExtendedSignature& sig);
/// Throws ConditionOneFailed / ConditionTwoFailed after validate_factors.
void require_admissible(const ExtendedSignature& sig);

/// g = 1 − 2n·χ(K), χ the rational Euler characteristic of the free product.
long long extended_rank(const ExtendedSignature& sig);

/// "ext:n=3,T1=0,T2=3,…"
std::string to_string(const ExtendedSignature& sig);
/// Grammar: ext:n=<int>,T1=<c>,T2=<k;…>,T3=<2d;…>,T4=<k;…>,T5=<2d;…>,T6=<c>,T7=<c>,
/// T8=<γ:orders|…>; missing keys are empty. T1L=<c> adds loxodromic T1 factors.
ExtendedSignature parse_extended(std::string_view text);

// ---------------------------------------------------------------------------
// Presentations

enum class FactorKind {
  loxodromic_cyclic,     // T1+ (A)
  elliptic_cyclic,       // T2 (E)
  lox_ell_abelian,       // T4 (T, F)
  glide_cyclic,          // T1 (A)
  pseudo_elliptic_cyclic,  // T3 (B)
  lox_pseudo_swap,       // T5 (A, B)
  glide_half_turn,       // T6 (A, B)
  reflection_cyclic,     // T7 (R)
  real_schottky_reflection,  // T8 (J, A_i, E_j)
};

const char* to_string(FactorKind kind);

/// One factor of a signature: its kind and order data.
struct FactorSpec {
  FactorKind kind = FactorKind::loxodromic_cyclic;
  int order = 0;            // k for T2/T4, 2d for T3/T5, 2 for T6/T7
  int gamma = 0;            // T8
  std::vector<int> orders;  // T8 cones
};

struct Generator {
  std::string name;
  int factor = 0;
  int order = 0;  // 0 for infinite order
  bool reversing = false;
};

/// Letters are ±(generator index + 1).
using Word = std::vector<int>;

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;
};

/// Factor order used everywhere: T4, T1+, T2 for conformal signatures.
std::vector<FactorSpec> factor_specs(const ConformalSignature& sig);
/// T1 (glides, then loxodromics), T2, …, T8.
std::vector<FactorSpec> factor_specs(const ExtendedSignature& sig);

/// Generators of one factor, in construction order, and its defining relators in
/// local letters (±(local index + 1)).
std::vector<Generator> factor_generators(const FactorSpec& spec, int factor_index);
std::vector<Word> factor_relators(const FactorSpec& spec);

Presentation presentation(const std::vector<FactorSpec>& specs);
Presentation presentation(const ConformalSignature& sig);
Presentation presentation(const ExtendedSignature& sig);

}  // namespace zns
