#pragma once

// Elementary factor groups in standard position, moved into a target disc, with the
// regions that make up the complement of their fundamental domain.

#include <string>
#include <vector>

#include "zns/moebius.hpp"
#include "zns/signature.hpp"

namespace zns {

struct FactorParams {
  double lambda = 9.0;  // loxodromic multiplier in standard position
  double mu = 1.0;      // pseudo-elliptic scale
};

/// An element of a factor as a word in its local letters.
struct Syllable {
  Word word;
  Mobius map;
  int length = 0;
};

struct TorsionElement {
  Word word;
  Mobius map;
  int order = 0;
};

struct FactorGroup {
  FactorSpec spec;
  std::vector<Generator> generators;
  std::vector<Mobius> maps;                 // localized generators
  std::vector<Mobius> standard_generators;  // before localization
  Mobius conjugator;                        // maps[i] = conjugator · standard[i] · conjugator⁻¹
  std::vector<Region> core;                 // envelope: complement of a fundamental domain
  std::vector<TorsionElement> torsion;
  ComplexPoint center;
  double radius = 0.0;                      // 0 when left in standard position
};

/// Standard position, no localization.
FactorGroup build_standard_factor(const FactorSpec& spec, int n, const FactorParams& params = {});

/// Builds in standard position and conjugates so that every envelope region lies in
/// the disc |z − center| < 0.9·radius. n = 0 skips the order and parity checks.
FactorGroup build_factor(const FactorSpec& spec, int n, const ComplexPoint& center, double radius,
                         const FactorParams& params = {});

const std::vector<Region>& factor_envelope(const FactorGroup& f);

/// Representatives of the nontrivial finite-order elements up to conjugacy in the factor.
std::vector<TorsionElement> enumerate_torsion(const FactorGroup& f);

/// Largest matrix distance from the identity over the defining relators.
double relation_residual(const FactorGroup& f);

/// Signed distance to the union of the envelope regions.
double envelope_distance(const std::vector<Region>& core, const ComplexPoint& z);

/// Every nontrivial element of the factor of length ≤ max_len, each once.
std::vector<Syllable> factor_elements(const FactorGroup& f, int max_len);

/// Reduced words of a free product of the given pieces (letters kept as supplied).
std::vector<Syllable> free_product_words(const std::vector<std::vector<Syllable>>& pieces,
                                         int max_len);

/// count[ℓ] = number of nontrivial factor elements of length ℓ, for ℓ ≤ max_len;
/// computed from the group structure alone.
std::vector<long long> factor_growth(const FactorSpec& spec, int max_len);

/// count[ℓ] = number of nontrivial reduced free-product words of length ℓ.
std::vector<long long> free_product_growth(const std::vector<std::vector<long long>>& pieces,
                                           int max_len);

std::string word_to_string(const Word& w, const std::vector<Generator>& generators);

}  // namespace zns
