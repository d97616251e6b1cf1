#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "zns/assembly.hpp"
#include "zns/error.hpp"

using namespace zns;

namespace {

ConformalSignature conformal(int n, int m, int a, std::vector<int> elliptic, std::vector<int> abelian = {}) {
  if (abelian.empty()) abelian.assign(static_cast<std::size_t>(m), n);
  ConformalSignature s;
  s.n = n;
  s.a = a;
  s.elliptic = std::move(elliptic);
  s.abelian = std::move(abelian);
  return s;
}

std::vector<ConformalSignature> conformal_suite() {
  return {
      conformal(2, 0, 0, {2, 2, 2}),
      conformal(3, 0, 1, {}),
      conformal(5, 0, 2, {5}),
      conformal(4, 0, 0, {2, 4}),
      conformal(6, 1, 0, {3}, {2}),
      conformal(5, 1, 1, {}, {5}),
  };
}

std::vector<ExtendedSignature> extended_suite() {
  ExtendedSignature a;
  a.n = 2;
  a.elliptic = {2};
  a.pseudo_elliptic = {4};
  ExtendedSignature b;
  b.n = 2;
  b.glide_half_turns = 1;
  ExtendedSignature c;
  c.n = 3;
  c.reflections = 1;
  c.loxodromics = 1;
  c.elliptic = {3};
  ExtendedSignature d;
  d.n = 3;
  d.real_schottky = {{1, {3}}};
  d.lox_pseudo = {2};
  return {a, b, c, d};
}

void check_properties(const Assembly& asm_) {
  const Certificate cert = verify(asm_);
  CHECK(cert.passed);
  const auto ws = words(asm_, 6);
  const auto counts = word_count(asm_, 6);
  long long total = 0;
  for (int l = 1; l <= 6; ++l) total += counts[static_cast<std::size_t>(l)];
  CHECK(static_cast<long long>(ws.size()) == total);
  CHECK(min_pairwise_distance(ws) > 1e-6);
  CHECK_NOTHROW(audit_no_parabolic(asm_, 6, 1e-6));
  for (const ComplexPoint& p : limit_points(asm_, 6)) {
    CHECK(assembly_envelope_distance(asm_, p) <= 1e-6);
  }
}

}  // namespace

TEST_CASE("three order-2 elliptics") {
  const Assembly a = assemble(conformal(2, 0, 0, {2, 2, 2}));
  CHECK(a.factors.size() == 3);
  CHECK(a.separators.size() == 2);
  CHECK(a.presentation.relators.size() == 3);
  for (const FactorGroup& f : a.factors) CHECK(f.spec.kind == FactorKind::elliptic_cyclic);
  CHECK(a.factors[2].center.value() == cplx{2 * a.layout.spacing, 0.0});
}

TEST_CASE("single loxodromic factor") {
  const Assembly a = assemble(conformal(7, 0, 1, {}));
  REQUIRE(a.factors.size() == 1);
  CHECK(verify(a).steps.empty());
  const auto ws = words(a, 3);
  CHECK(ws.size() == 6);
  CHECK(limit_points(a, 4).size() == 2);
}

TEST_CASE("extended n=2 with one elliptic and one pseudo-elliptic factor") {
  ExtendedSignature s;
  s.n = 2;
  s.elliptic = {2};
  s.pseudo_elliptic = {4};
  const Assembly a = assemble(s);
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].spec.kind == FactorKind::elliptic_cyclic);
  CHECK(a.factors[1].spec.kind == FactorKind::pseudo_elliptic_cyclic);
  CHECK(a.factors[1].spec.order == 4);
}

TEST_CASE("certificate outcomes") {
  SUBCASE("two loxodromics far apart") {
    const Assembly a = assemble(conformal(3, 0, 2, {}), Layout{10.0, 1.0});
    const Certificate c = verify(a);
    CHECK(c.steps.size() == 1);
    CHECK(c.worst_margin > 0.5);
  }
  SUBCASE("overlapping localization discs fail at step 1") {
    const FactorSpec lox{FactorKind::loxodromic_cyclic, 0, 0, {}};
    std::vector<FactorGroup> fs = {build_factor(lox, 3, cplx{0, 0}, 1.0), build_factor(lox, 3, cplx{0.8, 0}, 1.0)};
    const Assembly a = assemble_from_factors(std::move(fs), 3);
    try {
      verify(a);
      FAIL("certificate should fail");
    } catch (const CertificateError& e) {
      CHECK(e.step() == 1);
    }
  }
  SUBCASE("single glide/half-turn factor passes with no steps") {
    ExtendedSignature s;
    s.n = 2;
    s.glide_half_turns = 1;
    const Certificate c = verify(assemble(s));
    CHECK(c.passed);
    CHECK(c.steps.empty());
  }
  SUBCASE("too tight a layout is widened") {
    const Assembly a = assemble(conformal(3, 0, 2, {}), Layout{2.0, 1.0});
    CHECK(a.layout.spacing == doctest::Approx(4.0));
  }
  SUBCASE("inadmissible signatures are rejected") {
    CHECK_THROWS_AS(assemble(conformal(4, 0, 0, {2, 2})), Error);
  }
}

TEST_CASE("monotone in spacing") {
  for (const ConformalSignature& s : conformal_suite()) {
    for (double spacing : {3.0, 6.0, 12.0}) {
      CAPTURE(spacing);
      const Assembly a = assemble(s, Layout{spacing, 1.0});
      CHECK(a.layout.spacing == spacing);
      CHECK_NOTHROW(verify(a));
    }
  }
}

TEST_CASE("word enumeration") {
  SUBCASE("Z2 * Z2") {
    const auto ws = words(assemble(conformal(2, 0, 0, {2, 2, 2})), 1);
    CHECK(ws.size() == 3);
    ConformalSignature z2;
    z2.n = 2;
    z2.elliptic = {2, 2};
    z2.a = 1;
    const Assembly a = assemble(z2);
    // a loxodromic plus two involutions; drop the loxodromic by hand
    std::vector<FactorGroup> fs(a.factors.begin() + 1, a.factors.end());
    const Assembly b = assemble_from_factors(fs, 2);
    CHECK(words(b, 2).size() == 4);
  }
  SUBCASE("finite factor alone") {
    const FactorGroup f = build_factor({FactorKind::elliptic_cyclic, 5, 0, {}}, 5, cplx{0, 0}, 1.0);
    const Assembly a = assemble_from_factors({f}, 5);
    CHECK(words(a, 10).size() == 4);
    CHECK(limit_points(a, 6).empty());
  }
  SUBCASE("cap") { CHECK_THROWS_AS(words(assemble(conformal(3, 0, 1, {})), 13), Error); }
}

TEST_CASE("properties over the suites") {
  for (const ConformalSignature& s : conformal_suite()) {
    CAPTURE(to_string(s));
    check_properties(assemble(s));
  }
  for (const ExtendedSignature& s : extended_suite()) {
    CAPTURE(to_string(s));
    check_properties(assemble(s));
  }
}

TEST_CASE("audit and limit set") {
  const Assembly two = assemble(conformal(3, 0, 2, {}));
  const ParabolicAudit r = audit_no_parabolic(two, 6, 1e-6);
  CHECK(r.torsion_like == 0);
  CHECK(r.loxodromic == r.checked);
  CHECK(limit_points(two, 3).size() >= 8);
  CHECK(limit_points(two, 6).size() >= 64);

  const Assembly ell = assemble(conformal(5, 0, 1, {5}));
  const ParabolicAudit e = audit_no_parabolic(ell, 6, 1e-6);
  CHECK(e.torsion_like > 0);
}

TEST_CASE("quotient orbifold") {
  CHECK(quotient_orbifold_signature(conformal(2, 0, 0, {2, 2, 2})) == OrbifoldSignature{true, 0, {2, 2, 2, 2, 2, 2}});
  CHECK(quotient_orbifold_signature(conformal(3, 1, 1, {})) == OrbifoldSignature{true, 2, {}});
  CHECK_THROWS_AS(quotient_orbifold_signature(conformal(3, 0, 0, {})), Error);
  CHECK(to_string(OrbifoldSignature{true, 0, {2, 2}}) == "(0; 2,2)");
}

TEST_CASE("csv export") {
  const Assembly a = assemble(conformal(3, 0, 2, {}));
  std::ostringstream lim, outline;
  std::vector<ComplexPoint> pts = limit_points(a, 3);
  pts.push_back(ComplexPoint::infinity());
  CHECK(write_limit_csv(lim, pts) == 1);
  CHECK(lim.str().rfind("re,im\n", 0) == 0);
  write_outline_csv(outline, a, 16);
  CHECK(outline.str().rfind("curve_id,re,im\n", 0) == 0);
}
