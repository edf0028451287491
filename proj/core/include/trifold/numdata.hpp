#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trifold/riemann.hpp"

namespace trifold {

enum class MixedCase { index2, index3, index6 };

const char* to_string(MixedCase c);
std::optional<MixedCase> parse_mixed_case(const std::string& s);

// Numerical shadow of a classification candidate: group order plus branching
// types (kernel orders are fixed to 1 in the search pipelines).
struct NumericalDatum {
  MixedCase mixed_case = MixedCase::index2;
  long long n = 0;
  BranchType t1;
  std::optional<BranchType> t2;  // index two only; T2 == T3
  long long k1 = 1;
  long long k2 = 1;
  long long g1 = 0;  // derived genera; g2 == g3, and g1 == g2 in index 3/6
  long long g2 = 0;

  friend bool operator<(const NumericalDatum& a, const NumericalDatum& b) {
    if (a.n != b.n) return a.n < b.n;
    if (!(a.t1 == b.t1)) return a.t1 < b.t1;
    if (a.t2.has_value() != b.t2.has_value()) return a.t2.has_value() < b.t2.has_value();
    if (a.t2 && b.t2 && !(*a.t2 == *b.t2)) return *a.t2 < *b.t2;
    return false;
  }
  friend bool operator==(const NumericalDatum& a, const NumericalDatum& b) {
    return a.mixed_case == b.mixed_case && a.n == b.n && a.t1 == b.t1 && a.t2 == b.t2;
  }
};

struct ChernTriple {
  long long chi = 0;
  long long euler = 0;
  long long k_cubed = 0;
};

// (chi, 8 chi, -48 chi) for threefolds.
ChernTriple chern_invariants(long long chi);

// 1/42, 1/2 or 2g'-2 according to the quotient genus.
Rational theta_min(const BranchType& t);

// Bound for |G| in the absolutely faithful case: floor(42 sqrt(-42 d chi)),
// d = 32 (index two) or 216 (index three/six).
long long max_group_order(long long chi, MixedCase c);

// General bound floor(sqrt(-d chi prod k_i / theta_min(T_i))).
long long max_group_order(long long chi, MixedCase c,
                          const std::vector<BranchType>& types,
                          const std::vector<long long>& kernels);

// Largest automorphism group order per genus; explicit table entries with
// the Hurwitz bound 84(g-1) as fallback for unknown genera.
class NmaxTable {
 public:
  static NmaxTable hurwitz_only() { return NmaxTable(); }
  static NmaxTable load(const std::string& path);

  long long lookup(long long g) const;
  bool has_entry(long long g) const { return values_.count(g) > 0; }
  size_t size() const { return values_.size(); }

 private:
  std::map<long long, long long> values_;
};

// Part 1 of the classification: every numerical datum compatible with the
// Hurwitz formula, the divisibility and shape bounds, the group-order bound
// and the per-genus maximum. Sorted by (n, T1, T2).
std::vector<NumericalDatum> admissible_numerical_data(long long chi, MixedCase c,
                                                      const NmaxTable& nmax);

// Dimension of the family: 3(g1'+g2')-6+r1+r2 in index two,
// 3g1'-3+r1 in index three/six.
long long param_count(MixedCase c, const BranchType& t1, const BranchType* t2);

}  // namespace trifold
