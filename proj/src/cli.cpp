#include "zns/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zns/assembly.hpp"
#include "zns/census.hpp"
#include "zns/epimorphisms.hpp"
#include "zns/error.hpp"
#include "zns/exporting.hpp"
#include "zns/handlebody.hpp"

namespace zns {

namespace {

struct Config {
  std::string format = "json";
  std::string output;
  int n = 0;
  long long g = 0;
  int p = 0;
  int b = 0;
  int m = 0;
  bool brute_force = false;
  bool global_units = false;
  std::string signature;
  bool verify = false;
  std::string limit_path;
  int depth = 6;
  int samples = 512;
  double margin = 1e-6;
  double spacing = Layout{}.spacing;
  double radius = Layout{}.radius;
  std::string counts;
  std::string gammas;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InadmissibleSignature:
    case ErrorKind::OrderNotDividing:
    case ErrorKind::InvalidKindForParity:
    case ErrorKind::GcdConditionFailed:
    case ErrorKind::ConditionOneFailed:
    case ErrorKind::ConditionTwoFailed:
    case ErrorKind::HalfTurnConditionFailed:
    case ErrorKind::ParityViolation:
      return 2;
    case ErrorKind::CertificateFailure:
    case ErrorKind::PlacementFailure:
    case ErrorKind::ParabolicSuspect:
    case ErrorKind::OverlappingDiscs:
    case ErrorKind::NumericallyAmbiguous:
    case ErrorKind::DegenerateMatrix:
    case ErrorKind::CoincidentFixedPoints:
    case ErrorKind::IdentityInput:
      return 3;
    case ErrorKind::SearchSpaceTooLarge:
      return 4;
    case ErrorKind::ParseError:
      return 1;
  }
  return 1;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, text.find(';') != std::string::npos ? ';' : ',')) {
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "not an integer: '" + token + "'");
    }
  }
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_extended(const std::string& sig) { return sig.rfind("ext:", 0) == 0; }

ExtendedSignature extended_input(const Config& c) {
  ExtendedSignature s = parse_extended(c.signature);
  if (c.n != 0 && c.n != s.n) {
    throw Error(ErrorKind::ParseError, "--n " + std::to_string(c.n) + " disagrees with the signature's n");
  }
  return s;
}

ConformalSignature conformal_input(const Config& c) {
  if (c.n == 0) throw Error(ErrorKind::ParseError, "--n is required for a conformal signature");
  return parse_conformal(c.signature, c.n);
}

std::string census(const Config& c, const std::string& which) {
  if (which == "conformal") {
    const CensusRecord r = admissible_signatures(c.n, c.g);
    return c.format == "csv" ? to_csv(r) : to_json(r);
  }
  if (which == "extended-z2") {
    const Z2ExtRecord r = extended_z2_signatures(c.g);
    return c.format == "csv" ? z2_csv(r) : to_json(r);
  }
  if (!is_prime(c.p)) throw Error(ErrorKind::InadmissibleSignature, std::to_string(c.p) + " is not prime");
  return c.format == "csv" ? prime_actions_csv(c.p, c.g) : prime_actions_json(c.p, c.g);
}

std::string subgroups(const Config& c) {
  if (!is_prime(c.p)) throw Error(ErrorKind::InadmissibleSignature, std::to_string(c.p) + " is not prime");
  if (c.b < 0 || c.m < 0) throw Error(ErrorKind::InadmissibleSignature, "negative b or m");
  if (c.brute_force) {
    const BigInt k = subgroup_classes_bruteforce(c.p, c.b, c.m, c.global_units);
    return subgroups_json(c.p, c.b, c.m, k, c.global_units ? "orbits with global units" : "orbits");
  }
  return subgroups_json(c.p, c.b, c.m, subgroup_classes(c.p, c.b, c.m), "formula");
}

std::string construct(const Config& c, std::ostream& err) {
  const Layout layout{c.spacing, c.radius};
  Assembly asm_ = is_extended(c.signature) ? assemble(extended_input(c), layout)
                                           : assemble(conformal_input(c), layout);
  if (c.verify) asm_.certificate = verify(asm_, c.samples, c.margin);
  if (!c.limit_path.empty()) {
    std::ofstream file(c.limit_path);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write " + c.limit_path);
    const std::vector<ComplexPoint> points = limit_points(asm_, c.depth);
    const int skipped = write_limit_csv(file, points);
    err << "wrote " << points.size() - static_cast<std::size_t>(skipped) << " limit points to " << c.limit_path
        << '\n';
  }
  return assembly_json(asm_, c.signature);
}

std::string epi(const Config& c) {
  if (is_extended(c.signature)) {
    const ExtendedSignature s = extended_input(c);
    const Epimorphism phi = build_extended_epi(s);
    return epi_json(phi, verify_epi(s, phi), extended_rank(s));
  }
  const ConformalSignature s = conformal_input(c);
  const Epimorphism phi = build_conformal_epi(s);
  return epi_json(phi, verify_epi(s, phi), kernel_rank(s));
}

std::string fixed_locus(const Config& c) {
  if (is_extended(c.signature)) {
    const FixedLocusReport r = fixed_locus_extended(extended_input(c));
    return c.format == "csv" ? locus_csv(r) : to_json(r);
  }
  const ConformalSignature s = conformal_input(c);
  const FixedLocusReport r = fixed_locus_conformal(s);
  return c.format == "csv" ? locus_csv(r) : conformal_locus_json(r, quotient_descriptor(s));
}

std::string rank_extended(const Config& c) {
  const std::vector<int> k = parse_int_list(c.counts);
  if (k.size() != 5) throw Error(ErrorKind::ParseError, "--counts takes five integers a,b,c,d,e");
  const long long g = rank_extended_schottky(k[0], k[1], k[2], k[3], k[4], parse_int_list(c.gammas));
  return "{\n  \"rank\": " + std::to_string(g) + "\n}";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Z_n-Schottky groups: census, construction and epimorphisms", "zns"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", c.output, "write data to this file instead of stdout");

  CLI::App* census_cmd = app.add_subcommand("census", "count topological types");
  census_cmd->require_subcommand(1);
  CLI::App* conformal = census_cmd->add_subcommand("conformal", "Z_n-Schottky groups of rank g");
  conformal->add_option("--n", c.n)->required()->check(CLI::Range(2, 1 << 20));
  conformal->add_option("--g", c.g)->required()->check(CLI::NonNegativeNumber);
  CLI::App* z2 = census_cmd->add_subcommand("extended-z2", "extended Z_2-Schottky groups of rank g");
  z2->add_option("--g", c.g)->required()->check(CLI::NonNegativeNumber);
  CLI::App* actions = census_cmd->add_subcommand("prime-actions", "Z_p actions on a genus g handlebody");
  actions->add_option("--p", c.p)->required();
  actions->add_option("--g", c.g)->required()->check(CLI::NonNegativeNumber);

  CLI::App* sub = app.add_subcommand("subgroups", "Schottky normal subgroups of index p up to automorphism");
  sub->add_option("--p", c.p)->required();
  sub->add_option("--b", c.b)->required();
  sub->add_option("--m", c.m)->required();
  CLI::Option* brute = sub->add_flag("--brute-force", c.brute_force, "count orbits directly");
  sub->add_flag("--global-units", c.global_units, "also multiply by a common unit")->needs(brute);

  CLI::App* cons = app.add_subcommand("construct", "build generators and certify the combination");
  cons->add_option("--n", c.n);
  cons->add_option("--signature", c.signature)->required();
  cons->add_flag("--verify", c.verify);
  cons->add_option("--emit-limit-set", c.limit_path, "CSV of limit points");
  cons->add_option("--depth", c.depth)->check(CLI::Range(1, 12));
  cons->add_option("--samples", c.samples)->check(CLI::Range(8, 1 << 20));
  cons->add_option("--margin", c.margin)->check(CLI::NonNegativeNumber);
  cons->add_option("--spacing", c.spacing)->check(CLI::PositiveNumber);
  cons->add_option("--radius", c.radius)->check(CLI::PositiveNumber);

  CLI::App* epi_cmd = app.add_subcommand("epi", "the epimorphism onto Z_n (Z_2n) and its kernel");
  epi_cmd->add_option("--n", c.n);
  epi_cmd->add_option("--signature", c.signature)->required();

  CLI::App* locus = app.add_subcommand("fixed-locus", "fixed points of the induced handlebody map");
  locus->add_option("--n", c.n);
  locus->add_option("--signature", c.signature)->required();

  CLI::App* rank = app.add_subcommand("rank-extended", "rank of an extended Schottky group");
  rank->add_option("--counts", c.counts, "a,b,c,d,e")->required();
  rank->add_option("--gammas", c.gammas, "ranks of the real Schottky factors");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  try {
    std::string data;
    if (census_cmd->parsed()) {
      data = census(c, conformal->parsed() ? "conformal" : z2->parsed() ? "extended-z2" : "prime-actions");
    } else if (sub->parsed()) {
      data = subgroups(c);
    } else if (cons->parsed()) {
      data = construct(c, err);
    } else if (epi_cmd->parsed()) {
      data = epi(c);
    } else if (locus->parsed()) {
      data = fixed_locus(c);
    } else {
      data = rank_extended(c);
    }
    if (!data.empty() && data.back() != '\n') data += '\n';
    if (c.output.empty()) {
      out << data;
    } else {
      std::ofstream file(c.output);
      if (!file) throw Error(ErrorKind::ParseError, "cannot write " + c.output);
      file << data;
    }
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.kind());
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace zns
