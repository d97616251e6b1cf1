#include "zns/handlebody.hpp"

#include <algorithm>
#include <map>

#include <boost/rational.hpp>
#include <json.hpp>

#include "zns/error.hpp"

namespace zns {

namespace {

using Rational = boost::rational<long long>;

class Accumulator {
 public:
  FixedLocusEntry& at(int power) {
    FixedLocusEntry& e = by_power_[power];
    e.power = power;
    return e;
  }

  FixedLocusReport report() const {
    FixedLocusReport out;
    for (const auto& [power, e] : by_power_) out.entries.push_back(e);
    return out;
  }

 private:
  std::map<int, FixedLocusEntry> by_power_;
};

void validate_example(const AnticonformalExample& ex) {
  if (ex.n < 1 || ex.n % 2 == 0) {
    throw Error(ErrorKind::ParityViolation, "n = " + std::to_string(ex.n) + " must be odd");
  }
  if (ex.a1 < 0 || ex.a4 < 0 || ex.a5 < 0) throw Error(ErrorKind::InadmissibleSignature, "negative count");
  for (int l : ex.l) {
    if (l < 2 || ex.n % l != 0) throw Error(ErrorKind::OrderNotDividing, "l = " + std::to_string(l));
  }
  for (int r : ex.r) {
    if (r < 1 || ex.n % r != 0) throw Error(ErrorKind::OrderNotDividing, "r = " + std::to_string(r));
  }
}

}  // namespace

FixedLocusEntry FixedLocusReport::totals() const {
  FixedLocusEntry t;
  t.power = 0;
  for (const FixedLocusEntry& e : entries) {
    t.arcs += e.arcs;
    t.loops += e.loops;
    t.points += e.points;
    t.discs += e.discs;
    t.surfaces += e.surfaces;
  }
  return t;
}

FixedLocusReport fixed_locus_conformal(const ConformalSignature& sig) {
  require_admissible(sig);
  Accumulator acc;
  const int n = sig.n;
  for (int k : sig.elliptic) acc.at(n / k).arcs += n / k;
  for (int l : sig.abelian) acc.at(n / l).loops += n / l;
  return acc.report();
}

QuotientDescriptor quotient_descriptor(const ConformalSignature& sig) {
  require_admissible(sig);
  QuotientDescriptor q;
  q.handlebody_genus = sig.gamma();
  q.conical_arcs = sig.b();
  q.conical_loops = sig.m();
  q.note = "genus a + m = " + std::to_string(sig.gamma()) + " from the boundary orbifold; b + m would give " +
           std::to_string(sig.b() + sig.m());
  return q;
}

FixedLocusReport fixed_locus_extended(const ExtendedSignature& sig) {
  require_admissible(sig);
  Accumulator acc;
  const int n = sig.n;
  for (int d : sig.elliptic) acc.at(2 * n / d).arcs += 2 * n / d;
  for (int order : sig.pseudo_elliptic) {
    const int d = order / 2;
    if (d >= 2) acc.at(2 * n / d).arcs += n / d;
    acc.at(n / d).points += n / d;
  }
  for (int d : sig.lox_elliptic) acc.at(2 * n / d).loops += 2 * n / d;
  for (int order : sig.lox_pseudo) {
    const int d = order / 2;
    if (d >= 2) acc.at(2 * n / d).loops += 2 * n / d;
    acc.at(n / d).points += 2 * n / d;
  }
  if (sig.glide_half_turns > 0) acc.at(n).loops += static_cast<long long>(n) * sig.glide_half_turns;
  if (sig.reflections > 0) acc.at(n).discs += static_cast<long long>(n) * sig.reflections;
  if (!sig.real_schottky.empty()) {
    acc.at(n).surfaces += static_cast<long long>(n) * static_cast<long long>(sig.real_schottky.size());
  }
  return acc.report();
}

long long extended_example_genus(const AnticonformalExample& ex) {
  validate_example(ex);
  Rational inner(2 * ex.a1 + ex.a3() + 2 * ex.a4 + 2 * ex.a5 - 2);
  for (int l : ex.l) inner += 2 * (Rational(1) - Rational(1, l));
  for (int r : ex.r) inner += Rational(1) - Rational(1, r);
  const Rational g = Rational(ex.n) * inner + 1;
  if (g.denominator() != 1) throw Error(ErrorKind::NumericallyAmbiguous, "non-integral genus");
  return g.numerator();
}

ExampleOrbifolds orbifold_signatures_ext(const AnticonformalExample& ex) {
  validate_example(ex);
  std::vector<int> l = ex.l, r = ex.r;
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  ExampleOrbifolds out;
  out.klein.orientable = false;
  out.klein.genus = 2 * ex.a1 + ex.a3() + 2 * ex.a4 + 2 * ex.a5;
  for (int k : l) out.klein.cones.insert(out.klein.cones.end(), 2, k);
  for (int k : r) out.klein.cones.push_back(k);
  out.orientable_double.genus = out.klein.genus - 1;
  for (int k : l) out.orientable_double.cones.insert(out.orientable_double.cones.end(), 4, k);
  for (int k : r) out.orientable_double.cones.insert(out.orientable_double.cones.end(), 2, k);
  return out;
}

long long example_genus_via_double(const AnticonformalExample& ex) {
  const OrbifoldSignature base = orbifold_signatures_ext(ex).orientable_double;
  Rational chi(2 * base.genus - 2);
  for (int k : base.cones) chi += Rational(1) - Rational(1, k);
  // 2g − 2 = n·(2h − 2 + Σ(1 − 1/k))
  const Rational two_g = Rational(ex.n) * chi + 2;
  if (two_g.denominator() != 1 || two_g.numerator() % 2 != 0) {
    throw Error(ErrorKind::NumericallyAmbiguous, "non-integral genus");
  }
  return two_g.numerator() / 2;
}

ExtendedSignature to_extended_signature(const AnticonformalExample& ex) {
  validate_example(ex);
  ExtendedSignature s;
  s.n = ex.n;
  s.glides = ex.a1;
  s.elliptic = ex.l;
  for (int r : ex.r) s.pseudo_elliptic.push_back(2 * r);
  s.lox_elliptic.assign(static_cast<std::size_t>(ex.a4), ex.n);
  s.lox_pseudo.assign(static_cast<std::size_t>(ex.a5), 2);
  return canonical(s);
}

bool riemann_hurwitz_holds(const ConformalSignature& sig) {
  const long long n = sig.n;
  long long rhs = n * (2LL * sig.gamma() - 2);
  for (int k : sig.elliptic) rhs += 2 * (n - n / k);
  return 2 * conformal_rank(sig) - 2 == rhs;
}

std::string to_json(const FixedLocusReport& r) {
  nlohmann::json j = nlohmann::json::array();
  for (const FixedLocusEntry& e : r.entries) {
    j.push_back({{"power", e.power},
                 {"arcs", e.arcs},
                 {"loops", e.loops},
                 {"points", e.points},
                 {"discs", e.discs},
                 {"surfaces", e.surfaces}});
  }
  return j.dump(2);
}

FixedLocusReport fixed_locus_from_json(const std::string& text) {
  try {
    FixedLocusReport r;
    for (const nlohmann::json& e : nlohmann::json::parse(text)) {
      r.entries.push_back({e.at("power").get<int>(), e.at("arcs").get<long long>(), e.at("loops").get<long long>(),
                           e.at("points").get<long long>(), e.at("discs").get<long long>(),
                           e.at("surfaces").get<long long>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace zns
