#pragma once

// Free products of factor groups placed in disjoint discs, glued one at a time across
// separating circles, with a sampled certificate for each gluing.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zns/factors.hpp"
#include "zns/moebius.hpp"
#include "zns/signature.hpp"

namespace zns {

struct Layout {
  double spacing = 4.0;  // distance between consecutive factor centers on the real axis
  double radius = 1.0;   // localization radius of each factor
};

struct CertificateStep {
  int step = 0;  // 1-based; step t glues factor t onto factors 0..t−1
  long long samples = 0;
  double worst_margin = 0.0;             // containment margin of Σ_t and the envelopes
  double worst_absorption = 0.0;         // depth of the generator images of Σ_t in the envelopes
};

struct Certificate {
  std::vector<CertificateStep> steps;
  long long samples = 0;
  double worst_margin = 0.0;  // +∞ when there are no steps
  bool passed = true;
};

struct Assembly {
  int n = 0;
  bool extended = false;
  Layout layout;
  std::vector<FactorGroup> factors;
  std::vector<Circle> separators;  // separators[t − 1] = Σ_t, a round circle around factor t
  Presentation presentation;
  std::vector<Mobius> generator_maps;  // indexed like presentation.generators
  std::optional<Certificate> certificate;

  std::vector<FactorSpec> specs() const;
};

/// Places the factors of the signature at 0, spacing, 2·spacing, … and glues them.
/// A placement whose quick certificate fails is retried with doubled spacing, three
/// attempts in all, before PlacementFailure.
Assembly assemble(const ConformalSignature& sig, Layout layout = {}, const FactorParams& params = {});
Assembly assemble(const ExtendedSignature& sig, Layout layout = {}, const FactorParams& params = {});

/// Glues already built factors in the given order without placement checks; the
/// separator around factor t sits halfway across the gap to the nearest earlier factor.
Assembly assemble_from_factors(std::vector<FactorGroup> factors, int n, bool extended = false);

/// Throws CertificateError naming the first step and sample that fails.
Certificate verify(const Assembly& asm_, int samples_per_arc = 512, double margin = 1e-6);

/// Reduced free-product words of length ≤ max_len, each element once.
std::vector<Syllable> words(const Assembly& asm_, int max_len, int cap = 12);

/// count[ℓ] of reduced words of length ℓ from the factor structure alone.
std::vector<long long> word_count(const Assembly& asm_, int max_len);

/// Smallest ± matrix distance between two distinct words (∞ for fewer than two).
double min_pairwise_distance(const std::vector<Syllable>& elements);

struct ParabolicAudit {
  long long checked = 0;        // orientation-preserving words
  long long torsion_like = 0;   // trace² of a finite-order factor element
  long long loxodromic = 0;
};

/// Throws ParabolicSuspect with the offending word.
ParabolicAudit audit_no_parabolic(const Assembly& asm_, int max_len = 6, double eps = 1e-6);

/// Attracting fixed points of the loxodromic words and squared glide words up to the
/// given length, without repeats.
std::vector<ComplexPoint> limit_points(const Assembly& asm_, int depth);

/// Signed distance to the union of every factor envelope.
double assembly_envelope_distance(const Assembly& asm_, const ComplexPoint& z);

struct OrbifoldSignature {
  bool orientable = true;
  int genus = 0;  // cross-caps when not orientable
  std::vector<int> cones;

  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

/// Genus m + a with every elliptic order appearing twice.
OrbifoldSignature quotient_orbifold_signature(const ConformalSignature& sig);
/// "(0; 2,2)", or "(2; -, 3,3)" when not orientable.
std::string to_string(const OrbifoldSignature& sig);

/// "re,im" rows; returns the number of points at infinity that were left out.
int write_limit_csv(std::ostream& out, const std::vector<ComplexPoint>& points);
/// "curve_id,re,im" rows of every envelope boundary and separator.
void write_outline_csv(std::ostream& out, const Assembly& asm_, int samples_per_arc = 128);

}  // namespace zns
