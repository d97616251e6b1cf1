#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "zns/error.hpp"
#include "zns/signature.hpp"

using namespace zns;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("conformal grammar") {
  const ConformalSignature s = parse_conformal("m=1,a=2,b=6;2;3,l=3", 6);
  CHECK(s.n == 6);
  CHECK(s.a == 2);
  CHECK(s.elliptic == std::vector<int>{2, 3, 6});
  CHECK(s.abelian == std::vector<int>{3});
  CHECK(parse_conformal(to_string(s), 6) == s);

  const ConformalSignature d = parse_conformal("m=2,a=0,b=0", 5);
  CHECK(d.elliptic.empty());
  CHECK(d.abelian == std::vector<int>{5, 5});

  CHECK(kind_of([] { parse_conformal("m=1,l=2;2", 4); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_conformal("q=1", 4); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_conformal("a=x", 4); }) == ErrorKind::ParseError);
}

TEST_CASE("conformal admissibility and rank") {
  CHECK(admissible(parse_conformal("m=0,a=0,b=2;3", 6)));
  CHECK_FALSE(admissible(parse_conformal("m=0,a=0,b=2;2", 4)));
  CHECK_FALSE(admissible(parse_conformal("m=0,a=0,b=0", 4)));
  CHECK(kind_of([] { require_admissible(parse_conformal("m=0,a=0,b=3", 4)); }) == ErrorKind::OrderNotDividing);
  CHECK(conformal_rank(parse_conformal("m=0,a=0,b=11;11;11;11;11;11;11;11;11;11;11", 11)) == 100);
  CHECK(conformal_rank(parse_conformal("m=0,a=0,b=2;2;2", 2)) == 2);
}

TEST_CASE("canonical order") {
  const ConformalSignature x = parse_conformal("m=0,a=3", 4);
  const ConformalSignature y = parse_conformal("m=1,a=0", 4);
  CHECK(canonical_less(x, y));
  CHECK_FALSE(canonical_less(y, x));
}

TEST_CASE("extended grammar") {
  const ExtendedSignature s = parse_extended("ext:n=3,T1=1,T2=3,T3=6;2,T4=3,T5=2,T7=1,T8=1:3|0:3;3");
  CHECK(s.n == 3);
  CHECK(s.glides == 1);
  CHECK(s.elliptic == std::vector<int>{3});
  CHECK(s.pseudo_elliptic == std::vector<int>{2, 6});
  CHECK(s.real_schottky.size() == 2);
  CHECK(parse_extended(to_string(s)) == s);
  CHECK(parse_extended("ext:n=2,T1L=2").loxodromics == 2);
  CHECK(kind_of([] { parse_extended("n=2,T1=1"); }) == ErrorKind::ParseError);
}

TEST_CASE("extended side conditions") {
  CHECK(kind_of([] { validate_factors(parse_extended("ext:n=4,T7=1")); }) == ErrorKind::InvalidKindForParity);
  CHECK(kind_of([] { validate_factors(parse_extended("ext:n=3,T6=1")); }) == ErrorKind::InvalidKindForParity);
  CHECK(kind_of([] { validate_factors(parse_extended("ext:n=2,T3=2")); }) == ErrorKind::OrderNotDividing);
  CHECK(kind_of([] { require_admissible(parse_extended("ext:n=2,T2=2,T1L=1")); }) ==
        ErrorKind::ConditionOneFailed);
  CHECK(kind_of([] { require_admissible(parse_extended("ext:n=3,T7=1")); }) == ErrorKind::ConditionTwoFailed);
  CHECK(extended_rank(parse_extended("ext:n=2,T2=2,T3=4")) == 2);
  CHECK(extended_rank(parse_extended("ext:n=2,T1=1")) == 1);
}

TEST_CASE("presentations") {
  const Presentation p = presentation(parse_conformal("m=1,a=1,b=2", 2));
  CHECK(p.generators.size() == 4);
  const std::vector<FactorSpec> specs = factor_specs(parse_conformal("m=1,a=1,b=2", 2));
  REQUIRE(specs.size() == 3);
  CHECK(specs[0].kind == FactorKind::lox_ell_abelian);
  CHECK(specs[1].kind == FactorKind::loxodromic_cyclic);
  CHECK(specs[2].kind == FactorKind::elliptic_cyclic);
}
