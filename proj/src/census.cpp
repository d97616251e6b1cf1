#include "zns/census.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include <json.hpp>

#include "zns/error.hpp"

namespace zns {

namespace {

using nlohmann::json;

std::vector<int> divisors_from_two(int n) {
  std::vector<int> out;
  for (int d = 2; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Nondecreasing lists over pool whose terms n − n/d sum to target.
void elliptic_lists(int n, const std::vector<int>& pool, std::size_t from, long long target,
                    std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (target == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    const long long term = n - n / pool[i];
    if (term > target) continue;
    cur.push_back(pool[i]);
    elliptic_lists(n, pool, i, target - term, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> elliptic_lists(int n, long long target) {
  std::vector<std::vector<int>> out;
  if (target < 0) return out;
  std::vector<int> cur;
  elliptic_lists(n, divisors_from_two(n), 0, target, cur, out);
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

bool gcd_condition(int n, const std::vector<int>& orders) {
  int g = 0;
  for (int k : orders) g = std::gcd(g, n / k);
  return g == 1;
}

// Largest m + a allowed by the genus equation.
long long max_gamma(int n, long long g) { return (g + n - 1) / n; }

json big_to_json(const BigInt& x) {
  if (x <= std::numeric_limits<long long>::max()) return static_cast<long long>(x);
  return x.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<long long>());
}

}  // namespace

CensusRecord admissible_signatures(int n, long long g) {
  CensusRecord rec;
  rec.n = n;
  rec.g = g;
  if (n < 2 || g < 2) return rec;
  const std::vector<int> pool = divisors_from_two(n);
  for (long long m = 0; m <= max_gamma(n, g); ++m) {
    std::vector<std::vector<int>> abelian;
    std::vector<int> cur;
    multisets(pool, static_cast<int>(m), 0, cur, abelian);
    for (long long a = 0; m + a <= max_gamma(n, g); ++a) {
      const long long target = g - 1 - n * (m + a - 1);
      for (const std::vector<int>& el : elliptic_lists(n, target)) {
        if (m == 0 && a == 0 && !gcd_condition(n, el)) continue;
        for (const std::vector<int>& ab : abelian) {
          ConformalSignature s;
          s.n = n;
          s.a = static_cast<int>(a);
          s.elliptic = el;
          s.abelian = ab;
          rec.signatures.push_back(std::move(s));
        }
      }
    }
  }
  std::sort(rec.signatures.begin(), rec.signatures.end(), canonical_less);
  rec.count = rec.signatures.size();
  return rec;
}

BigInt count_types(int n, long long g) { return admissible_signatures(n, g).count; }

int psi(int n) { return static_cast<int>(divisors_from_two(n).size()); }

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt multiset_count(int n, int m) { return binomial(psi(n) + m - 1, m); }

BigInt count_fixed_m(int n, long long g, int m) {
  BigInt out = 0;
  for (long long a = 0; m + a <= max_gamma(n, g); ++a) {
    for (const std::vector<int>& el : elliptic_lists(n, g - 1 - n * (m + a - 1))) {
      if (m == 0 && a == 0 && !gcd_condition(n, el)) continue;
      ++out;
    }
  }
  return out;
}

BigInt count_via_decomposition(int n, long long g) {
  if (n < 2 || g < 2) return 0;
  BigInt out = count_fixed_m(n, g, 0);
  for (long long m = 1; m <= max_gamma(n, g); ++m) {
    out += multiset_count(n, static_cast<int>(m)) * count_fixed_m(n, g, static_cast<int>(m));
  }
  return out;
}

BigInt closed_N2(long long g) {
  const long long k = (g + 1) / 2;
  return BigInt(1 + k) * (2 + k) / 2;
}

BigInt closed_N3(long long g) {
  const long long k = (g + 2) / 3;
  const bool g_even = g % 2 == 0, k_even = k % 2 == 0;
  if (g_even && k_even) return BigInt(k + 2) * (k + 2) / 4;
  if (g_even) return BigInt(k + 1) * (k + 1) / 4;
  if (k_even) return BigInt(k) * (k + 2) / 4;
  return BigInt(k + 1) * (k + 3) / 4;
}

std::vector<PrimeTriple> prime_signatures(int p, long long g) {
  std::vector<PrimeTriple> out;
  const long long top = (g + p - 1) / p;
  for (long long s = 0; s <= top; ++s) {
    const long long rest = g - static_cast<long long>(p) * s;
    if (rest % (p - 1) != 0) continue;
    const long long b = rest / (p - 1) + 1;
    if (b < 0) continue;
    for (long long m = 0; m <= s; ++m) out.push_back({m, s - m, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt subgroup_classes(int p, long long b, long long m) {
  if (p == 2) return 1;
  const long long h = (p - 3) / 2;
  return binomial(b + h, h) * binomial(m + h, h);
}

BigInt subgroup_classes_bruteforce(int p, int b, int m, bool global_units) {
  const int len = b + m;
  const int units = p - 1;
  double space = 1.0;
  for (int i = 0; i < len; ++i) space *= units;
  if (space > 1e7) throw Error(ErrorKind::SearchSpaceTooLarge, "more than 10^7 tuples");
  const long long total = static_cast<long long>(space);

  auto decode = [&](long long code) {
    std::vector<int> t(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(code % units) + 1;
      code /= units;
    }
    return t;
  };
  auto encode = [&](const std::vector<int>& t) {
    long long code = 0;
    for (int i = len - 1; i >= 0; --i) code = code * units + (t[static_cast<std::size_t>(i)] - 1);
    return code;
  };
  int root = 1;
  for (int r = 1; r < p; ++r) {
    int x = 1, order = 0;
    do {
      x = x * r % p;
      ++order;
    } while (x != 1);
    if (order == units) {
      root = r;
      break;
    }
  }

  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  BigInt orbits = 0;
  for (long long start = 0; start < total; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++orbits;
    std::queue<long long> queue;
    queue.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      const std::vector<int> t = decode(queue.front());
      queue.pop();
      std::vector<std::vector<int>> next;
      for (int i = 0; i + 1 < len; ++i) {
        if (i + 1 == b) continue;  // swaps stay inside a block
        std::vector<int> s = t;
        std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i) + 1]);
        next.push_back(std::move(s));
      }
      for (int i = 0; i < len; ++i) {
        std::vector<int> s = t;
        s[static_cast<std::size_t>(i)] = p - s[static_cast<std::size_t>(i)];
        next.push_back(std::move(s));
      }
      if (global_units) {
        std::vector<int> s = t;
        for (int& x : s) x = x * root % p;
        next.push_back(std::move(s));
      }
      for (const std::vector<int>& s : next) {
        const long long code = encode(s);
        if (!seen[static_cast<std::size_t>(code)]) {
          seen[static_cast<std::size_t>(code)] = 1;
          queue.push(code);
        }
      }
    }
  }
  return orbits;
}

BigInt prime_actions_count(int p, long long g) {
  BigInt out = 0;
  for (const PrimeTriple& t : prime_signatures(p, g)) out += subgroup_classes(p, t.b, t.m);
  return out;
}

Z2ExtRecord extended_z2_signatures(long long g) {
  Z2ExtRecord rec;
  rec.g = g;
  const long long total = g + 3;
  for (long long a1 = 0; 4 * a1 <= total; ++a1) {
    for (long long a2 = 0; 4 * a1 + 2 * a2 <= total; ++a2) {
      for (long long a3 = 0; 4 * a1 + 2 * a2 + 3 * a3 <= total; ++a3) {
        const long long rest = total - 4 * a1 - 2 * a2 - 3 * a3;
        if (rest % 4 != 0) continue;
        const long long q = rest / 4;  // a4 + a5 + a6
        for (long long a4 = 0; a4 <= q; ++a4) {
          for (long long a5 = 0; a4 + a5 <= q; ++a5) {
            const long long a6 = q - a4 - a5;
            if (a1 + a3 + a5 + a6 == 0) continue;
            rec.tuples.push_back({a1, a2, a3, a4, a5, a6});
          }
        }
      }
    }
  }
  std::sort(rec.tuples.begin(), rec.tuples.end());
  rec.count = rec.tuples.size();
  rec.formula = extended_z2_count_formula(g).value;
  rec.discrepancy = rec.formula != rec.count;
  if (rec.discrepancy) {
    rec.note = "direct enumeration gives " + rec.count.str() + " tuples, the n(d) sum gives " +
               rec.formula.str() + "; the enumeration is reported";
  }
  return rec;
}

Z2Formula extended_z2_count_formula(long long g) {
  Z2Formula out;
  const long long total = g + 3;
  for (long long a = 0; 4 * a <= total; ++a) {
    for (long long b = 0; 4 * a + 2 * b <= total; ++b) {
      for (long long c = 0; 4 * a + 2 * b + 3 * c <= total; ++c) {
        const long long rest = total - 4 * a - 2 * b - 3 * c;
        if (rest % 4 != 0) continue;
        if (a == 0 && c < 1) continue;
        const long long d = rest / 4;
        out.value += BigInt(d + 1) * (d + 2) / 2;
      }
    }
  }
  long long count = 0;
  {
    // counted inline to avoid recursion through extended_z2_signatures
    for (long long a1 = 0; 4 * a1 <= total; ++a1) {
      for (long long a2 = 0; 4 * a1 + 2 * a2 <= total; ++a2) {
        for (long long a3 = 0; 4 * a1 + 2 * a2 + 3 * a3 <= total; ++a3) {
          const long long rest = total - 4 * a1 - 2 * a2 - 3 * a3;
          if (rest % 4 != 0) continue;
          const long long q = rest / 4;
          for (long long a4 = 0; a4 <= q; ++a4) {
            for (long long a5 = 0; a4 + a5 <= q; ++a5) {
              if (a1 + a3 + a5 + (q - a4 - a5) > 0) ++count;
            }
          }
        }
      }
    }
  }
  out.agrees_with_enumeration = out.value == count;
  return out;
}

ExtendedSignature z2_signature(const Z2Tuple& t) {
  ExtendedSignature s;
  s.n = 2;
  s.glides = static_cast<int>(t[0]);
  s.elliptic.assign(static_cast<std::size_t>(t[1]), 2);
  s.pseudo_elliptic.assign(static_cast<std::size_t>(t[2]), 4);
  s.lox_elliptic.assign(static_cast<std::size_t>(t[3]), 2);
  s.lox_pseudo.assign(static_cast<std::size_t>(t[4]), 4);
  s.glide_half_turns = static_cast<int>(t[5]);
  return s;
}

std::string to_json(const CensusRecord& r) {
  json j;
  j["n"] = r.n;
  j["g"] = r.g;
  j["count"] = big_to_json(r.count);
  j["signatures"] = json::array();
  for (const ConformalSignature& s : r.signatures) {
    j["signatures"].push_back(
        {{"m", s.m()}, {"a", s.a}, {"b", s.b()}, {"elliptic_orders", s.elliptic}, {"abelian_orders", s.abelian}});
  }
  return j.dump(2);
}

std::string to_csv(const CensusRecord& r) {
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + std::to_string(v[i]);
    return out;
  };
  std::string out = "m,a,b,elliptic_orders,abelian_orders\n";
  for (const ConformalSignature& s : r.signatures) {
    out += std::to_string(s.m()) + "," + std::to_string(s.a) + "," + std::to_string(s.b()) + "," + join(s.elliptic) +
           "," + join(s.abelian) + "\n";
  }
  return out;
}

CensusRecord census_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    CensusRecord r;
    r.n = j.at("n").get<int>();
    r.g = j.at("g").get<long long>();
    r.count = big_from_json(j.at("count"));
    for (const json& s : j.at("signatures")) {
      ConformalSignature sig;
      sig.n = r.n;
      sig.a = s.at("a").get<int>();
      sig.elliptic = s.at("elliptic_orders").get<std::vector<int>>();
      sig.abelian = s.at("abelian_orders").get<std::vector<int>>();
      if (sig.m() != s.at("m").get<int>() || sig.b() != s.at("b").get<int>()) {
        throw Error(ErrorKind::ParseError, "list lengths disagree with m or b");
      }
      r.signatures.push_back(std::move(sig));
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string to_json(const Z2ExtRecord& r) {
  json j;
  j["g"] = r.g;
  j["count"] = big_to_json(r.count);
  j["formula"] = big_to_json(r.formula);
  j["discrepancy"] = r.discrepancy;
  j["note"] = r.note;
  j["tuples"] = json::array();
  for (const Z2Tuple& t : r.tuples) j["tuples"].push_back(t);
  return j.dump(2);
}

Z2ExtRecord z2_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Z2ExtRecord r;
    r.g = j.at("g").get<long long>();
    r.count = big_from_json(j.at("count"));
    r.formula = big_from_json(j.at("formula"));
    r.discrepancy = j.at("discrepancy").get<bool>();
    r.note = j.at("note").get<std::string>();
    for (const json& t : j.at("tuples")) r.tuples.push_back(t.get<Z2Tuple>());
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace zns
