#pragma once

// Exact enumeration and counting of topological types of Z_n-Schottky groups, of
// their Schottky normal subgroups in the prime case, and of extended Z_2-Schottky groups.

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zns/signature.hpp"

namespace zns {

using BigInt = boost::multiprecision::cpp_int;

struct CensusRecord {
  int n = 0;
  long long g = 0;
  BigInt count = 0;
  std::vector<ConformalSignature> signatures;  // canonical_less order

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// Every (m, a, b, n_1..n_b, l_1..l_m) of rank g satisfying the ordering, gcd and genus
/// conditions, listed directly.
CensusRecord admissible_signatures(int n, long long g);
BigInt count_types(int n, long long g);

/// Number of divisors d ≥ 2 of n.
int psi(int n);
/// Nondecreasing m-tuples of divisors ≥ 2 of n.
BigInt multiset_count(int n, int m);
/// N(n, g; m): tuples (a, b, n_1..n_b) with the given m.
BigInt count_fixed_m(int n, long long g, int m);
/// N(n, g; 0) + Σ_m M_m(n) N(n, g; m).
BigInt count_via_decomposition(int n, long long g);

BigInt closed_N2(long long g);
BigInt closed_N3(long long g);

struct PrimeTriple {
  long long m = 0;
  long long a = 0;
  long long b = 0;

  friend bool operator==(const PrimeTriple&, const PrimeTriple&) = default;
  friend auto operator<=>(const PrimeTriple&, const PrimeTriple&) = default;
};

/// All (m, a, b) for n = p prime, sorted.
std::vector<PrimeTriple> prime_signatures(int p, long long g);

BigInt binomial(long long n, long long k);

/// Schottky normal subgroups of index p up to geometric automorphisms; 1 for p = 2.
BigInt subgroup_classes(int p, long long b, long long m);
/// Orbits of (units mod p)^{b+m} under block permutations and coordinatewise negation,
/// plus simultaneous unit multiplication when global_units is set. Throws
/// SearchSpaceTooLarge beyond 10^7 tuples.
BigInt subgroup_classes_bruteforce(int p, int b, int m, bool global_units = false);

/// Σ over prime_signatures(p, g) of subgroup_classes(p, b, m).
BigInt prime_actions_count(int p, long long g);

using Z2Tuple = std::array<long long, 6>;

struct Z2ExtRecord {
  long long g = 0;
  std::vector<Z2Tuple> tuples;  // lexicographic
  BigInt count = 0;
  BigInt formula = 0;           // Σ n(d) over N_g
  bool discrepancy = false;     // formula ≠ count
  std::string note;

  friend bool operator==(const Z2ExtRecord&, const Z2ExtRecord&) = default;
};

/// Tuples (a_1..a_6) with a_1 + a_3 + a_5 + a_6 > 0 and
/// g = 4a_1 + 2a_2 + 3a_3 + 4a_4 + 4a_5 + 4a_6 − 3.
Z2ExtRecord extended_z2_signatures(long long g);

struct Z2Formula {
  BigInt value = 0;
  bool agrees_with_enumeration = false;
};
/// Σ over (a, b, c, d) with g + 3 = 4a + 2b + 3c + 4d and (a = 0 ⇒ c ≥ 1) of (d+1)(d+2)/2.
Z2Formula extended_z2_count_formula(long long g);

/// The extended signature with n = 2 named by a tuple.
ExtendedSignature z2_signature(const Z2Tuple& t);

std::string to_json(const CensusRecord& r);
std::string to_csv(const CensusRecord& r);
CensusRecord census_from_json(const std::string& text);

std::string to_json(const Z2ExtRecord& r);
Z2ExtRecord z2_from_json(const std::string& text);

}  // namespace zns
