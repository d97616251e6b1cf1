// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zns/assembly.hpp"
#include "zns/census.hpp"
#include "zns/epimorphisms.hpp"
#include "zns/error.hpp"
#include "zns/factors.hpp"
#include "zns/handlebody.hpp"

using namespace zns;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ConformalSignature conformal(int n, int a, std::vector<int> elliptic, std::vector<int> abelian) {
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

Outcome census_reproduction() {
  Outcome o;
  const std::vector<std::tuple<int, long long, int>> cases{
      {5, 5, 2}, {5, 10, 3}, {11, 10, 1}, {11, 100, 12}, {13, 157, 16}};
  for (const auto& [n, g, want] : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const BigInt got = count_types(n, g);
    const double dt = seconds_since(t0);
    const std::string label = "N(" + std::to_string(n) + "," + std::to_string(g) + ")";
    o.require(got == want, label + " = " + got.str());
    o.require(dt < 1.0, label + " took " + std::to_string(dt) + " s");
  }
  return o;
}

Outcome tuple_sets() {
  Outcome o;
  auto relabeled = [](const std::vector<std::array<long long, 3>>& printed) {
    std::set<PrimeTriple> out;
    for (const auto& t : printed) out.insert({t[2], t[1], t[0]});
    return out;
  };
  auto as_set = [](const std::vector<PrimeTriple>& v) { return std::set<PrimeTriple>(v.begin(), v.end()); };
  o.require(as_set(prime_signatures(11, 100)) ==
                relabeled({{11, 0, 0}, {0, 0, 10}, {0, 1, 9}, {0, 2, 8}, {0, 3, 7}, {0, 4, 6},
                           {0, 5, 5}, {0, 6, 4}, {0, 7, 3}, {0, 8, 2}, {0, 9, 1}, {0, 10, 0}}),
            "p = 11, g = 100");
  o.require(as_set(prime_signatures(13, 157)) ==
                relabeled({{13, 0, 1}, {0, 0, 13}, {13, 1, 0}, {0, 1, 12}, {0, 2, 11}, {0, 3, 10},
                           {0, 4, 9}, {0, 5, 8}, {0, 6, 7}, {0, 7, 6}, {0, 8, 5}, {0, 9, 4},
                           {0, 10, 3}, {0, 11, 2}, {0, 12, 1}, {0, 13, 0}}),
            "p = 13, g = 157");
  return o;
}

Outcome actions_count() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const BigInt k = prime_actions_count(13, 157);
  o.require(k == 87108, "p = 13, g = 157 gives " + k.str());
  for (long long g = 2; g <= 41; ++g) {
    const long long want = g % 2 == 0 ? (g + 2) * (g + 4) / 8 : (g + 3) * (g + 5) / 8;
    o.require(prime_actions_count(2, g) == want, "p = 2, g = " + std::to_string(g));
  }
  o.require(seconds_since(t0) < 1.0, "slower than 1 s");
  return o;
}

Outcome closed_forms() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (long long g = 2; g <= 50; ++g) {
    o.require(closed_N2(g) == count_types(2, g), "N(2," + std::to_string(g) + ")");
    o.require(closed_N3(g) == count_types(3, g), "N(3," + std::to_string(g) + ")");
  }
  for (int n = 2; n <= 12; ++n) {
    for (long long g = 2; g <= 60; ++g) {
      o.require(count_via_decomposition(n, g) == count_types(n, g),
                "decomposition at n = " + std::to_string(n) + ", g = " + std::to_string(g));
    }
  }
  o.require(seconds_since(t0) < 30.0, "slower than 30 s");
  return o;
}

Outcome orbit_oracle() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int p : {3, 5, 7}) {
    for (int b = 0; b <= 4; ++b) {
      for (int m = 0; m <= 4; ++m) {
        o.require(subgroup_classes_bruteforce(p, b, m, false) == subgroup_classes(p, b, m),
                  "p = " + std::to_string(p) + ", b = " + std::to_string(b) + ", m = " + std::to_string(m));
      }
    }
  }
  o.require(seconds_since(t0) < 60.0, "slower than 60 s");
  return o;
}

Outcome extended_z2() {
  Outcome o;
  const Z2ExtRecord g2 = extended_z2_signatures(2);
  o.require(g2.tuples == std::vector<Z2Tuple>{{0, 1, 1, 0, 0, 0}}, "g = 2 tuple set");
  const Z2ExtRecord g1 = extended_z2_signatures(1);
  const std::set<Z2Tuple> got(g1.tuples.begin(), g1.tuples.end());
  o.require(got.count({1, 0, 0, 0, 0, 0}) == 1 && got.count({0, 0, 0, 0, 0, 1}) == 1, "g = 1 listed tuples");
  o.require(g1.discrepancy && !g1.note.empty(), "g = 1 discrepancy not flagged");
  return o;
}

Outcome rank_agreement() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  long long cases = 0;
  for (int n = 2; n <= 8; ++n) {
    for (long long g = 2; g <= 20; ++g) {
      for (const ConformalSignature& s : admissible_signatures(n, g).signatures) {
        const Epimorphism phi = build_conformal_epi(s);
        const std::optional<long long> r = kernel_rank_schreier(phi);
        o.require(verify_epi(s, phi).ok(), "kernel report for " + to_string(s));
        o.require(kernel_rank(s) == g && r && *r == g, "rank for n = " + std::to_string(n) + ", " + to_string(s));
        ++cases;
      }
    }
  }
  o.require(cases >= 200, "only " + std::to_string(cases) + " cases");
  o.require(seconds_since(t0) < 60.0, "slower than 60 s");
  o.detail = o.pass ? std::to_string(cases) + " signatures" : o.detail;
  return o;
}

Outcome epimorphism_oracle() {
  Outcome o;
  long long cases = 0;
  for (int n = 2; n <= 10; ++n) {
    const std::vector<int> pool = divisors_from_two(n);
    for (int m = 0; 2 * m <= 5; ++m) {
      for (int a = 0; 2 * m + a <= 5; ++a) {
        for (int b = 0; 2 * m + a + b <= 5; ++b) {
          if (m + a + b == 0) continue;
          for (const auto& ab : multisets(pool, m)) {
            for (const auto& el : multisets(pool, b)) {
              const ConformalSignature s = conformal(n, a, el, ab);
              o.require(exists_epi_bruteforce(s) == admissible(s), to_string(s) + " at n = " + std::to_string(n));
              ++cases;
            }
          }
        }
      }
    }
  }
  o.detail = o.pass ? std::to_string(cases) + " signatures" : o.detail;
  return o;
}

Outcome geometric_certificates() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, std::function<Assembly()>>> suite{
      {"n=2 (0,0,3)", [] { return assemble(conformal(2, 0, {2, 2, 2}, {})); }},
      {"n=5 (0,1,1)", [] { return assemble(conformal(5, 1, {5}, {})); }},
      {"n=4 orders 2,4", [] { return assemble(conformal(4, 0, {2, 4}, {})); }},
      {"n=3 (0,2,0)", [] { return assemble(conformal(3, 2, {}, {})); }},
      {"n=6 (1,0,1)", [] { return assemble(conformal(6, 0, {3}, {2})); }},
      {"n=5 (1,1,0)", [] { return assemble(conformal(5, 1, {}, {5})); }},
      {"ext (0,1,1,0,0,0)", [] { return assemble(z2_signature({0, 1, 1, 0, 0, 0})); }},
      {"ext glide only", [] { return assemble(parse_extended("ext:n=2,T1=1")); }},
      {"ext glide/half-turn", [] { return assemble(parse_extended("ext:n=2,T6=1")); }},
      {"ext real Schottky", [] { return assemble(parse_extended("ext:n=3,T5=2,T8=1:3")); }},
  };
  for (const auto& [label, build] : suite) {
    try {
      const Assembly asm_ = build();
      o.require(verify(asm_, 512, 1e-6).passed, label + ": certificate");
      o.require(min_pairwise_distance(words(asm_, 6)) > 1e-6, label + ": repeated word");
      audit_no_parabolic(asm_, 6, 1e-6);
      for (const ComplexPoint& p : limit_points(asm_, 6)) {
        if (assembly_envelope_distance(asm_, p) > 1e-6) {
          o.require(false, label + ": limit point outside the envelopes");
          break;
        }
      }
    } catch (const Error& e) {
      o.require(false, label + ": " + e.what());
    }
  }
  o.require(seconds_since(t0) < 120.0, "slower than 2 min");
  return o;
}

Outcome worked_examples() {
  Outcome o;
  const FactorParams p{2.0, 1.0};
  const FactorGroup glide = build_factor({FactorKind::glide_cyclic, 0, 0, {}}, 2, cplx{0, 0}, 1.0, p);
  o.require(matrix_distance(glide.standard_generators[0].pow(4), Mobius(16.0, 0.0, 0.0, 1.0)) < 1e-12, "A^4");
  const FactorGroup t6 = build_factor({FactorKind::glide_half_turn, 2, 0, {}}, 2, cplx{0, 0}, 1.0, p);
  const Mobius& A = t6.standard_generators[0];
  const Mobius& B = t6.standard_generators[1];
  o.require(matrix_distance(B * A * A, Mobius(-4.0, 0.0, 0.0, 1.0)) < 1e-12, "BA^2");
  return o;
}

Outcome riemann_hurwitz() {
  Outcome o;
  for (int n = 2; n <= 12; ++n) {
    for (long long g = 2; g <= 40; ++g) {
      for (const ConformalSignature& s : admissible_signatures(n, g).signatures) {
        o.require(riemann_hurwitz_holds(s), "n = " + std::to_string(n) + ", " + to_string(s));
      }
    }
  }
  std::mt19937 rng(7);
  const std::vector<int> ns{3, 5, 7, 9, 15, 21};
  int done = 0;
  while (done < 200) {
    AnticonformalExample ex;
    ex.n = ns[rng() % ns.size()];
    std::vector<int> divisors;
    for (int d = 1; d <= ex.n; ++d) {
      if (ex.n % d == 0) divisors.push_back(d);
    }
    ex.a1 = static_cast<int>(rng() % 3);
    ex.a4 = static_cast<int>(rng() % 2);
    ex.a5 = static_cast<int>(rng() % 2);
    for (int i = static_cast<int>(rng() % 3); i > 0; --i) ex.l.push_back(divisors[1 + rng() % (divisors.size() - 1)]);
    for (int i = static_cast<int>(rng() % 3); i > 0; --i) ex.r.push_back(divisors[rng() % divisors.size()]);
    const ExtendedSignature s = to_extended_signature(ex);
    if (!condition_one(s) || !condition_two(s)) continue;
    const long long g = extended_example_genus(ex);
    o.require(g >= 1 && g == example_genus_via_double(ex), "example genus " + std::to_string(g));
    ++done;
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"census reproduction", census_reproduction},
      {"printed tuple sets under relabeling", tuple_sets},
      {"prime action counts", actions_count},
      {"closed forms and decomposition", closed_forms},
      {"orbit count oracle", orbit_oracle},
      {"extended Z2 enumeration", extended_z2},
      {"kernel rank agreement", rank_agreement},
      {"epimorphism existence oracle", epimorphism_oracle},
      {"geometric certificates", geometric_certificates},
      {"worked kernel generators", worked_examples},
      {"Riemann-Hurwitz identities", riemann_hurwitz},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                seconds_since(t0), o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
