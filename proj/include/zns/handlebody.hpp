#pragma once

// Fixed-point loci and quotient orbifolds of the finite-order handlebody homeomorphism
// τ induced by a (extended) Z_n-Schottky group. Counts only.

#include <string>
#include <vector>

#include "zns/assembly.hpp"
#include "zns/signature.hpp"

namespace zns {

/// Components fixed by the power τ^power.
struct FixedLocusEntry {
  int power = 1;
  long long arcs = 0;
  long long loops = 0;
  long long points = 0;
  long long discs = 0;
  long long surfaces = 0;

  friend bool operator==(const FixedLocusEntry&, const FixedLocusEntry&) = default;
};

/// Entries sorted by power; powers with nothing fixed are omitted.
struct FixedLocusReport {
  std::vector<FixedLocusEntry> entries;

  FixedLocusEntry totals() const;
  bool empty() const { return entries.empty(); }

  friend bool operator==(const FixedLocusReport&, const FixedLocusReport&) = default;
};

/// Σ n/n_j arcs fixed by τ^{n/n_j} and Σ n/l_k loops fixed by τ^{n/l_k}.
FixedLocusReport fixed_locus_conformal(const ConformalSignature& sig);

struct QuotientDescriptor {
  int handlebody_genus = 0;  // a + m
  int conical_arcs = 0;      // b
  int conical_loops = 0;     // m
  std::string note;
};
QuotientDescriptor quotient_descriptor(const ConformalSignature& sig);

/// τ has order 2n. Throws the admissibility errors of the signature.
FixedLocusReport fixed_locus_extended(const ExtendedSignature& sig);

/// n odd; a_1 glide factors, elliptic factors of orders l, pseudo-elliptic factors of
/// orders 2r, a_4 loxodromic-elliptic and a_5 loxodromic/pseudo-elliptic factors.
struct AnticonformalExample {
  int n = 3;
  int a1 = 0;
  std::vector<int> l;
  std::vector<int> r;
  int a4 = 0;
  int a5 = 0;

  int a2() const { return static_cast<int>(l.size()); }
  int a3() const { return static_cast<int>(r.size()); }
};

/// g = n(2a_1 + a_3 + 2a_4 + 2a_5 − 2 + 2Σ(1 − 1/l_j) + Σ(1 − 1/r_t)) + 1.
/// Throws ParityViolation for even n and OrderNotDividing for orders not dividing n.
long long extended_example_genus(const AnticonformalExample& ex);

struct ExampleOrbifolds {
  OrbifoldSignature klein;              // cross-caps 2a_1 + a_3 + 2a_4 + 2a_5
  OrbifoldSignature orientable_double;  // genus one less, cones doubled again
};
ExampleOrbifolds orbifold_signatures_ext(const AnticonformalExample& ex);

/// Genus of the degree-n cover of the orientable double, by Riemann–Hurwitz.
long long example_genus_via_double(const AnticonformalExample& ex);

/// The example as a factor list: T4 factors use order n, T5 factors order 2.
ExtendedSignature to_extended_signature(const AnticonformalExample& ex);

/// 2g − 2 = n(2(m + a) − 2 + Σ 2(1 − 1/n_j)) with g from the rank formula.
bool riemann_hurwitz_holds(const ConformalSignature& sig);

/// [{"power", "arcs", "loops", "points", "discs", "surfaces"}, …]
std::string to_json(const FixedLocusReport& r);
FixedLocusReport fixed_locus_from_json(const std::string& text);

}  // namespace zns
