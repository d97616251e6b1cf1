#pragma once

// Machine-readable renderings of the module results used by the command line. Floats
// are written with 17 significant digits.

#include <string>

#include "zns/assembly.hpp"
#include "zns/census.hpp"
#include "zns/epimorphisms.hpp"
#include "zns/handlebody.hpp"

namespace zns {

/// Factors, separators, generator matrices and the certificate when present.
std::string assembly_json(const Assembly& asm_, const std::string& signature);

std::string epi_json(const Epimorphism& phi, const KernelReport& report, long long formula_rank);

std::string prime_actions_json(int p, long long g);
std::string prime_actions_csv(int p, long long g);

std::string z2_csv(const Z2ExtRecord& r);

std::string subgroups_json(int p, int b, int m, const BigInt& classes, const std::string& method);

/// {"fixed_locus": [...], "quotient": {...}}; the quotient only for conformal input.
std::string conformal_locus_json(const FixedLocusReport& r, const QuotientDescriptor& q);
std::string locus_csv(const FixedLocusReport& r);

}  // namespace zns
