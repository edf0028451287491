#include "trifold/numdata.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "trifold/error.hpp"

namespace trifold {

const char* to_string(MixedCase c) {
  switch (c) {
    case MixedCase::index2: return "index2";
    case MixedCase::index3: return "index3";
    case MixedCase::index6: return "index6";
  }
  return "?";
}

std::optional<MixedCase> parse_mixed_case(const std::string& s) {
  if (s == "index2") return MixedCase::index2;
  if (s == "index3") return MixedCase::index3;
  if (s == "index6") return MixedCase::index6;
  return std::nullopt;
}

ChernTriple chern_invariants(long long chi) {
  return ChernTriple{chi, 8 * chi, -48 * chi};
}

Rational theta_min(const BranchType& t) {
  if (t.g_prime == 0) return Rational(1, 42);
  if (t.g_prime == 1) return Rational(1, 2);
  return Rational(2 * t.g_prime - 2);
}

namespace {

long long isqrt(long long v) {
  if (v < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

long long case_d(MixedCase c) { return c == MixedCase::index2 ? 32 : 216; }

std::vector<long long> divisors(long long v) {
  std::vector<long long> out;
  for (long long d = 1; d * d <= v; ++d) {
    if (v % d) continue;
    out.push_back(d);
    if (d != v / d) out.push_back(v / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// floor(sqrt(num/den)) for a non-negative rational
long long floor_sqrt(const Rational& q) {
  long long t = isqrt(q.num() / q.den());
  while (Rational((t + 1) * (t + 1)) <= q) ++t;
  while (Rational(t * t) > q) --t;
  return t;
}

}  // namespace

long long max_group_order(long long chi, MixedCase c) {
  if (chi > -1) throw Error("classification bound needs chi <= -1");
  // floor(42 sqrt(-42 d chi)) = floor(sqrt(42^3 d |chi|))
  return isqrt(74088 * case_d(c) * (-chi));
}

long long max_group_order(long long chi, MixedCase c,
                          const std::vector<BranchType>& types,
                          const std::vector<long long>& kernels) {
  if (chi > -1) throw Error("classification bound needs chi <= -1");
  if (types.size() != 3 || kernels.size() != 3)
    throw Error("three types and kernel orders expected");
  Rational inside(case_d(c) * (-chi));
  for (int i = 0; i < 3; ++i)
    inside *= Rational(kernels[i]) / theta_min(types[i]);
  return floor_sqrt(inside);
}

// ------------------------------------------------------------------- N_max

NmaxTable NmaxTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open N_max table: " + path);
  NmaxTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    long long g = 0, v = 0;
    if (!(row >> g >> v))
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected g and N_max");
    if (g < 2 || g > 301)
      throw ParseError(path + ":" + std::to_string(lineno) + ": genus out of range");
    if (v < 1) throw ParseError(path + ":" + std::to_string(lineno) + ": bad value");
    t.values_[g] = v;
  }
  return t;
}

long long NmaxTable::lookup(long long g) const {
  auto it = values_.find(g);
  if (it != values_.end()) return it->second;
  return 84 * (g - 1);
}

// --------------------------------------------------------- admissible data

namespace {

// All branch types for a group of order acting_order on a curve of genus g,
// subject to the order-divisibility, count and quotient-genus bounds.
struct TypeSearch {
  long long acting_order;  // |G_i| (kernels are trivial here)
  long long genus;
  long long full_n;        // |G|
  long long d_i;
  long long m_divisor;     // m_{i,j} must divide this
  Rational gprime_bound;   // bounds1 vi right-hand side

  std::vector<BranchType> run() const {
    std::vector<BranchType> out;
    std::vector<long long> ms;
    for (long long m : divisors(m_divisor))
      if (m >= 2 && m <= 4 * genus + 2) ms.push_back(m);
    for (int gp = 0;; ++gp) {
      if (Rational(gp) > gprime_bound) break;
      Rational target = Rational(2 * (genus - 1), acting_order) + Rational(2 - 2 * gp);
      if (target < Rational(0)) break;  // larger g' only lowers the target
      Rational rmax = Rational(4 * d_i * (genus - 1), full_n) + Rational(4 - 4 * gp);
      if (rmax < Rational(0)) continue;
      BranchType t;
      t.g_prime = gp;
      descend(t, target, rmax, 0, ms, out);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void descend(BranchType& t, const Rational& target, const Rational& rmax,
               size_t min_idx, const std::vector<long long>& ms,
               std::vector<BranchType>& out) const {
    if (target.is_zero()) {
      out.push_back(t);
      return;
    }
    if (Rational(t.r() + 1) > rmax) return;
    for (size_t i = min_idx; i < ms.size(); ++i) {
      Rational term(ms[i] - 1, ms[i]);
      if (term > target) break;  // terms grow with m
      t.orders.push_back(static_cast<int>(ms[i]));
      descend(t, target - term, rmax, i, ms, out);
      t.orders.pop_back();
    }
  }
};

}  // namespace

std::vector<NumericalDatum> admissible_numerical_data(long long chi, MixedCase c,
                                                      const NmaxTable& nmax) {
  if (chi > -1) throw Error("admissible data needs chi <= -1");
  const long long a = -chi;
  const long long n_theo = max_group_order(chi, c);
  std::vector<NumericalDatum> out;

  if (c == MixedCase::index2) {
    for (long long n = 2; n <= n_theo; n += 2) {
      const long long A = a * n;  // (g1-1)(g2-1)^2
      for (long long t1m : divisors(A)) {
        const long long s2 = A / t1m;
        const long long s = isqrt(s2);
        if (s * s != s2) continue;
        const long long g1 = t1m + 1, g2 = s + 1;
        // bounds1 iii): (g_i - 1) | chi * n
        if (A % t1m != 0 || A % s != 0) continue;
        // bounds1 vii) with d = (1, 2, 2)
        if (n > nmax.lookup(g1)) continue;
        if (n / 2 > nmax.lookup(g2)) continue;

        TypeSearch s1{n, g1, n, 1, s * s,
                      Rational(1) + Rational(1 * a, s * s)};
        TypeSearch s2_{n / 2, g2, n, 2, s * t1m,
                       Rational(1) + Rational(2 * a, s * t1m)};
        auto t1s = s1.run();
        if (t1s.empty()) continue;
        auto t2s = s2_.run();
        for (const auto& T1 : t1s)
          for (const auto& T2 : t2s) {
            // group-order bound with the actual types
            Rational lhs = Rational(n * n) * theta_min(T1) * theta_min(T2) * theta_min(T2);
            if (lhs > Rational(case_d(c) * a)) continue;
            NumericalDatum d;
            d.mixed_case = c;
            d.n = n;
            d.t1 = T1;
            d.t2 = T2;
            d.g1 = g1;
            d.g2 = g2;
            out.push_back(std::move(d));
          }
      }
    }
  } else {
    const long long divisor = (c == MixedCase::index3) ? 3 : 6;
    for (long long t = 1;; ++t) {
      const long long t3 = t * t * t;
      if (t3 > n_theo * a) break;
      if (t3 % a != 0) continue;
      const long long n = t3 / a;
      if (n % divisor != 0) continue;
      const long long g1 = t + 1;
      if (a * n % t != 0) continue;  // bounds1 iii)
      if (n / 3 > nmax.lookup(g1)) continue;  // vii) with d_i = 3

      TypeSearch s1{n / 3, g1, n, 3, t * t, Rational(1) + Rational(3 * a, t * t)};
      for (const auto& T1 : s1.run()) {
        Rational lhs = Rational(n * n) * theta_min(T1) * theta_min(T1) * theta_min(T1);
        if (lhs > Rational(case_d(c) * a)) continue;
        NumericalDatum d;
        d.mixed_case = c;
        d.n = n;
        d.t1 = T1;
        d.g1 = g1;
        d.g2 = g1;
        out.push_back(std::move(d));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long param_count(MixedCase c, const BranchType& t1, const BranchType* t2) {
  if (c == MixedCase::index2) {
    if (!t2) throw Error("index two parameter count needs T2");
    return 3LL * (t1.g_prime + t2->g_prime) - 6 + t1.r() + t2->r();
  }
  return 3LL * t1.g_prime - 3 + t1.r();
}

}  // namespace trifold
