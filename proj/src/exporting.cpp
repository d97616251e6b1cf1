#include "zns/exporting.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace zns {

namespace {

using nlohmann::json;

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json point_json(const ComplexPoint& p) {
  if (p.is_infinite()) return "inf";
  return complex_json(p.value());
}

json count_json(const BigInt& x) {
  if (x <= std::numeric_limits<long long>::max()) return static_cast<long long>(x);
  return x.str();
}

json circle_json(const Circle& c) {
  if (c.is_line()) return {{"A", c.A()}, {"B", complex_json(c.B())}, {"C", c.C()}};
  return {{"center", complex_json(c.center())}, {"radius", c.radius()}};
}

json certificate_json(const Certificate& c) {
  json steps = json::array();
  for (const CertificateStep& s : c.steps) {
    steps.push_back({{"step", s.step},
                     {"samples", s.samples},
                     {"worst_margin", s.worst_margin},
                     {"worst_absorption", s.worst_absorption}});
  }
  json out{{"passed", c.passed}, {"samples", c.samples}, {"steps", steps}};
  // JSON has no infinity; a certificate with no steps reports a null margin
  out["worst_margin"] = std::isfinite(c.worst_margin) ? json(c.worst_margin) : json(nullptr);
  return out;
}

json entry_json(const FixedLocusEntry& e) {
  return {{"power", e.power}, {"arcs", e.arcs}, {"loops", e.loops},
          {"points", e.points}, {"discs", e.discs}, {"surfaces", e.surfaces}};
}

}  // namespace

std::string assembly_json(const Assembly& asm_, const std::string& signature) {
  json factors = json::array();
  for (const FactorGroup& f : asm_.factors) {
    factors.push_back({{"kind", to_string(f.spec.kind)},
                       {"order", f.spec.order},
                       {"center", point_json(f.center)},
                       {"radius", f.radius}});
  }
  json separators = json::array();
  for (const Circle& c : asm_.separators) separators.push_back(circle_json(c));
  json generators = json::array();
  for (std::size_t i = 0; i < asm_.generator_maps.size(); ++i) {
    const Generator& g = asm_.presentation.generators[i];
    const Mobius& f = asm_.generator_maps[i];
    generators.push_back({{"name", g.name},
                          {"factor", g.factor},
                          {"order", g.order},
                          {"reversing", f.reversing()},
                          {"matrix", json::array({complex_json(f.a()), complex_json(f.b()), complex_json(f.c()),
                                                  complex_json(f.d())})}});
  }
  json out{{"signature", signature},
           {"n", asm_.n},
           {"extended", asm_.extended},
           {"layout", {{"spacing", asm_.layout.spacing}, {"radius", asm_.layout.radius}}},
           {"factors", factors},
           {"separators", separators},
           {"generators", generators}};
  if (asm_.certificate) out["certificate"] = certificate_json(*asm_.certificate);
  return out.dump(2);
}

std::string epi_json(const Epimorphism& phi, const KernelReport& report, long long formula_rank) {
  json images = json::array();
  for (std::size_t i = 0; i < phi.exponents.size(); ++i) {
    images.push_back({{"generator", phi.presentation.generators[i].name}, {"exponent", phi.exponents[i]}});
  }
  json rep{{"well_defined", report.well_defined},
           {"surjective", report.surjective},
           {"torsion_free", report.torsion_free},
           {"orientation_ok", report.orientation_ok}};
  rep["schreier_rank"] = report.rank ? json(*report.rank) : json(nullptr);
  json out{{"modulus", phi.modulus}, {"images", images}, {"kernel", rep}, {"rank", formula_rank}};
  return out.dump(2);
}

std::string prime_actions_json(int p, long long g) {
  json rows = json::array();
  for (const PrimeTriple& t : prime_signatures(p, g)) {
    rows.push_back({{"m", t.m}, {"a", t.a}, {"b", t.b}, {"classes", count_json(subgroup_classes(p, t.b, t.m))}});
  }
  json out{{"p", p}, {"g", g}, {"count", count_json(prime_actions_count(p, g))}, {"signatures", rows}};
  return out.dump(2);
}

std::string prime_actions_csv(int p, long long g) {
  std::ostringstream os;
  os << "m,a,b,classes\n";
  for (const PrimeTriple& t : prime_signatures(p, g)) {
    os << t.m << ',' << t.a << ',' << t.b << ',' << subgroup_classes(p, t.b, t.m) << '\n';
  }
  return os.str();
}

std::string z2_csv(const Z2ExtRecord& r) {
  std::ostringstream os;
  os << "a1,a2,a3,a4,a5,a6\n";
  for (const Z2Tuple& t : r.tuples) {
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << '\n';
  }
  return os.str();
}

std::string subgroups_json(int p, int b, int m, const BigInt& classes, const std::string& method) {
  json out{{"p", p}, {"b", b}, {"m", m}, {"classes", count_json(classes)}, {"method", method}};
  return out.dump(2);
}

std::string conformal_locus_json(const FixedLocusReport& r, const QuotientDescriptor& q) {
  json entries = json::array();
  for (const FixedLocusEntry& e : r.entries) entries.push_back(entry_json(e));
  json out{{"fixed_locus", entries},
           {"quotient",
            {{"handlebody_genus", q.handlebody_genus},
             {"conical_arcs", q.conical_arcs},
             {"conical_loops", q.conical_loops},
             {"note", q.note}}}};
  return out.dump(2);
}

std::string locus_csv(const FixedLocusReport& r) {
  std::ostringstream os;
  os << "power,arcs,loops,points,discs,surfaces\n";
  for (const FixedLocusEntry& e : r.entries) {
    os << e.power << ',' << e.arcs << ',' << e.loops << ',' << e.points << ',' << e.discs << ',' << e.surfaces
       << '\n';
  }
  return os.str();
}

}  // namespace zns
