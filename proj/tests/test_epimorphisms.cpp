#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "zns/assembly.hpp"
#include "zns/epimorphisms.hpp"
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

std::vector<int> divisors_from_two(int n) {
  std::vector<int> out;
  for (int d = 2; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Nondecreasing lists of length len drawn from pool.
void multisets(const std::vector<int>& pool, int len, std::size_t from, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    multisets(pool, len, i, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> multisets(const std::vector<int>& pool, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  multisets(pool, len, 0, cur, out);
  return out;
}

// Every signature (valid orders) with the given bounds, admissible or not.
std::vector<ConformalSignature> signatures(int n, int max_m, int max_a, int max_b) {
  std::vector<ConformalSignature> out;
  const auto pool = divisors_from_two(n);
  for (int m = 0; m <= max_m; ++m) {
    for (int a = 0; a <= max_a; ++a) {
      for (int b = 0; b <= max_b; ++b) {
        for (const auto& ab : multisets(pool, m)) {
          for (const auto& el : multisets(pool, b)) {
            ConformalSignature s;
            s.n = n;
            s.a = a;
            s.elliptic = el;
            s.abelian = ab;
            out.push_back(s);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("conformal epimorphism examples") {
  const ConformalSignature s24 = conformal(4, 0, 0, {2, 4});
  const Epimorphism phi = build_conformal_epi(s24);
  CHECK(phi.exponents == std::vector<int>{2, 1});
  const KernelReport r = verify_epi(s24, phi);
  CHECK(r.surjective);
  CHECK(r.torsion_free);
  CHECK(r.ok());

  CHECK_THROWS_AS(build_conformal_epi(conformal(4, 0, 0, {2, 2})), Error);
  try {
    build_conformal_epi(conformal(4, 0, 0, {2, 2}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GcdConditionFailed);
  }

  // m = 1, a = 0, l = 5: T_1 carries the unit and F_1 ↦ n/l
  const ConformalSignature t4 = conformal(5, 1, 0, {});
  const Epimorphism p4 = build_conformal_epi(t4);
  CHECK(p4.exponents == std::vector<int>{1, 1});
  CHECK(verify_epi(t4, p4).ok());

  // a > 0: A_1 ↦ 1 and every T ↦ 0
  const ConformalSignature mixed = conformal(6, 1, 2, {3}, {2});
  const Epimorphism pm = build_conformal_epi(mixed);
  CHECK(pm.exponents == std::vector<int>{0, 3, 1, 0, 2});
  CHECK(verify_epi(mixed, pm).ok());
}

TEST_CASE("kernel report failures") {
  const ConformalSignature s = conformal(4, 0, 1, {4});
  const KernelReport bad = verify_epi(s, make_epi(s, {1, 2}));
  CHECK_FALSE(bad.torsion_free);
  CHECK_FALSE(bad.rank.has_value());

  ExtendedSignature glide;
  glide.n = 2;
  glide.glides = 1;
  glide.elliptic = {2};
  const KernelReport even = verify_epi(glide, make_epi(glide, {2, 2}));
  CHECK_FALSE(even.orientation_ok);
  CHECK_FALSE(even.ok());

  CHECK(verify_epi(s, make_epi(s, {2, 1})).ok());
  const ConformalSignature half = conformal(4, 0, 1, {2});
  CHECK_FALSE(verify_epi(half, make_epi(half, {1, 1})).well_defined);
}

TEST_CASE("ranks") {
  CHECK(kernel_rank(conformal(2, 0, 0, {2, 2, 2})) == 2);
  CHECK(kernel_rank(conformal(11, 0, 0, std::vector<int>(11, 11))) == 100);
  CHECK(kernel_rank(conformal(5, 0, 1, {5})) == 5);

  const ConformalSignature s3 = conformal(2, 0, 0, {2, 2, 2});
  CHECK(kernel_rank_schreier(make_epi(s3, {1, 1, 1})) == 2);
  const ConformalSignature s5 = conformal(5, 0, 1, {5});
  CHECK(kernel_rank_schreier(build_conformal_epi(s5)) == 5);
  for (int n : {2, 3, 7}) {
    const ConformalSignature s = conformal(n, 0, 1, {});
    CHECK(kernel_rank_schreier(build_conformal_epi(s)) == 1);
  }
}

TEST_CASE("three rank routes agree for n <= 8, g <= 20") {
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const ConformalSignature& s : signatures(n, 2, 2, 4)) {
      if (!admissible(s)) continue;
      const long long g = conformal_rank(s);
      if (g > 20) continue;
      CAPTURE(to_string(s));
      const Epimorphism phi = build_conformal_epi(s);
      REQUIRE(verify_epi(s, phi).ok());
      CHECK(kernel_rank(s) == g);
      CHECK(euler_rank(s) == g);
      CHECK(kernel_rank_schreier(phi) == g);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("brute force agrees with the admissibility predicate") {
  for (int n = 2; n <= 10; ++n) {
    for (const ConformalSignature& s : signatures(n, 2, 2, 5)) {
      if (2 * s.m() + s.a + s.b() > 5 || s.m() + s.a + s.b() == 0) continue;
      CAPTURE(to_string(s));
      CHECK(exists_epi_bruteforce(s) == admissible(s));
    }
  }
  CHECK(exists_epi_bruteforce(conformal(4, 0, 1, {})));
  CHECK_THROWS_AS(exists_epi_bruteforce(conformal(13, 0, 1, {})), Error);
  CHECK_THROWS_AS(exists_epi_bruteforce(conformal(3, 0, 9, {})), Error);
}

TEST_CASE("extended epimorphisms") {
  ExtendedSignature s;
  s.n = 2;
  s.elliptic = {2};
  s.pseudo_elliptic = {4};
  const Epimorphism phi = build_extended_epi(s);
  CHECK(phi.modulus == 4);
  CHECK(phi.exponents == std::vector<int>{2, 1});
  const KernelReport r = verify_epi(s, phi);
  CHECK(r.ok());
  CHECK(r.rank == 2);

  ExtendedSignature glide;
  glide.n = 2;
  glide.glides = 1;
  CHECK(build_extended_epi(glide).exponents == std::vector<int>{1});
  CHECK(verify_epi(glide, build_extended_epi(glide)).rank == 1);

  ExtendedSignature conformal_only;
  conformal_only.n = 3;
  conformal_only.elliptic = {3};
  conformal_only.loxodromics = 1;
  try {
    build_extended_epi(conformal_only);
    FAIL("expected ConditionOneFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConditionOneFailed);
  }
}

TEST_CASE("extended: construction, brute force and Schreier rank agree") {
  std::vector<ExtendedSignature> suite;
  for (int n = 1; n <= 6; ++n) {
    ExtendedSignature base;
    base.n = n;
    std::vector<ExtendedSignature> cands;
    auto add = [&](auto edit) {
      ExtendedSignature s = base;
      edit(s);
      cands.push_back(s);
    };
    add([](ExtendedSignature& s) { s.glides = 1; });
    add([](ExtendedSignature& s) { s.glides = 1; s.loxodromics = 1; });
    add([&](ExtendedSignature& s) { s.glide_half_turns = 1; });
    add([&](ExtendedSignature& s) { s.reflections = 1; s.elliptic = {n}; });
    add([&](ExtendedSignature& s) { s.reflections = 2; });
    add([&](ExtendedSignature& s) { s.real_schottky = {{1, {}}}; });
    add([&](ExtendedSignature& s) { s.real_schottky = {{0, {n}}}; });
    add([&](ExtendedSignature& s) { s.pseudo_elliptic = {2 * n}; });
    add([&](ExtendedSignature& s) { s.lox_pseudo = {2 * n}; s.elliptic = {n}; });
    add([&](ExtendedSignature& s) { s.lox_elliptic = {n}; s.glides = 1; });
    for (const ExtendedSignature& s : cands) {
      try {
        validate_factors(s);
      } catch (const Error&) {
        continue;
      }
      suite.push_back(s);
    }
  }
  int built = 0;
  for (const ExtendedSignature& s : suite) {
    CAPTURE(to_string(s));
    bool predicate = condition_one(s) && condition_two(s);
    CHECK(exists_epi_bruteforce(s) == predicate);
    if (!predicate) continue;
    const Epimorphism phi = build_extended_epi(s);
    const KernelReport r = verify_epi(s, phi);
    REQUIRE(r.ok());
    CHECK(kernel_rank_schreier(phi) == extended_rank(s));
    ++built;
  }
  CHECK(built > 20);
}

TEST_CASE("extended rank formula") {
  CHECK(rank_extended_schottky(0, 0, 1, 0, 0, {}) == 1);
  CHECK(rank_extended_schottky(1, 1, 0, 0, 0, {}) == 1);
  CHECK(rank_extended_schottky(0, 0, 0, 0, 2, {1, 3}) == 5);
  try {
    rank_extended_schottky(0, 0, 0, 1, 0, {});
    FAIL("expected HalfTurnConditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HalfTurnConditionFailed);
  }
  // the same numbers from the free-product Euler characteristic
  ExtendedSignature s;
  s.n = 1;
  s.reflections = 1;
  s.glides = 2;
  s.loxodromics = 1;
  s.real_schottky = {{2, {}}};
  CHECK(extended_rank(s) == rank_extended_schottky(1, 0, 2, 1, 1, {2}));
}

TEST_CASE("matrix kernel contains no elliptics; parity matches orientation") {
  const std::vector<ConformalSignature> conf = {conformal(2, 0, 0, {2, 2, 2}), conformal(5, 0, 1, {5}),
                                                conformal(6, 1, 0, {3}, {2})};
  for (const ConformalSignature& s : conf) {
    CAPTURE(to_string(s));
    const Assembly a = assemble(s);
    const Epimorphism phi = build_conformal_epi(s);
    for (const Syllable& w : words(a, 6)) {
      if (phi.value(w.word) != 0) continue;
      const cplx t2 = w.map.trace_squared();
      const bool elliptic = std::abs(t2.imag()) < 1e-6 && t2.real() < 4.0 - 1e-6 && t2.real() > -1e-6;
      CHECK_FALSE(elliptic);
    }
  }

  ExtendedSignature e;
  e.n = 3;
  e.real_schottky = {{1, {3}}};
  e.lox_pseudo = {2};
  const Assembly a = assemble(e);
  const Epimorphism phi = build_extended_epi(e);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(a.generator_maps.size()) - 1);
  std::uniform_int_distribution<int> len(1, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w;
    Mobius m;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) {
      const int g = pick(rng);
      const bool inv = rng() % 2 == 1;
      w.push_back(inv ? -(g + 1) : g + 1);
      m = m * (inv ? a.generator_maps[static_cast<std::size_t>(g)].inverse() : a.generator_maps[static_cast<std::size_t>(g)]);
    }
    CHECK((phi.value(w) % 2 == 1) == m.reversing());
  }
}
