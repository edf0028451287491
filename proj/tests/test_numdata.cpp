#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "trifold/numdata.hpp"

using namespace trifold;

namespace {

// Direct re-check of the shape constraints, written independently of the
// enumeration in admissible_numerical_data.
bool naive_datum_check(const NumericalDatum& d, long long chi, const NmaxTable& nmax) {
  const long long a = -chi;
  const long long dvals[3] = {d.mixed_case == MixedCase::index2 ? 1LL : 3LL,
                              d.mixed_case == MixedCase::index2 ? 2LL : 3LL,
                              d.mixed_case == MixedCase::index2 ? 2LL : 3LL};
  const BranchType types[3] = {d.t1, d.t2 ? *d.t2 : d.t1, d.t2 ? *d.t2 : d.t1};
  const long long genera[3] = {d.g1, d.g2, d.g2};
  // Hurwitz integrality and genus >= 2
  for (int i = 0; i < 3; ++i) {
    auto g = hurwitz_genus(d.n / dvals[i], 1, types[i]);
    if (!g || *g != genera[i] || *g < 2) return false;
  }
  // chi consistency
  if (-(d.g1 - 1) * (d.g2 - 1) * (d.g2 - 1) != chi * d.n) return false;
  // index divides the order
  if (d.n % (d.mixed_case == MixedCase::index2 ? 2 : d.mixed_case == MixedCase::index3 ? 3 : 6))
    return false;
  for (int i = 0; i < 3; ++i) {
    const long long gi = genera[i];
    const long long gnext = genera[(i + 1) % 3], gprev = genera[(i + 2) % 3];
    const long long prod = (gnext - 1) * (gprev - 1);
    for (int m : types[i].orders) {
      if (prod % m != 0) return false;                      // ii)
      if (m > 4 * gi + 2) return false;                     // v)
    }
    if ((a * d.n) % (gi - 1) != 0) return false;            // iii)
    // iv)
    Rational rmax = Rational(4 * dvals[i] * (gi - 1), d.n) +
                    Rational(4 - 4 * types[i].g_prime);
    if (Rational(types[i].r()) > rmax) return false;
    // vi)
    if (Rational(types[i].g_prime) > Rational(1) + Rational(dvals[i] * a, prod))
      return false;
    // vii)
    if (d.n / dvals[i] > nmax.lookup(gi)) return false;
  }
  // group order bound
  Rational lhs = Rational(d.n * d.n);
  for (int i = 0; i < 3; ++i) lhs *= theta_min(types[i]);
  long long dd = d.mixed_case == MixedCase::index2 ? 32 : 216;
  return lhs <= Rational(dd * a);
}

NmaxTable shipped_nmax() { return NmaxTable::load(std::string(TRIFOLD_DATA_DIR) + "/nmax.tsv"); }

}  // namespace

TEST_CASE("theta_min") {
  CHECK(theta_min(BranchType::parse("[0;2^2,4^2]")) == Rational(1, 42));
  CHECK(theta_min(BranchType::parse("[1;2^2]")) == Rational(1, 2));
  CHECK(theta_min(BranchType::parse("[3;-]")) == Rational(4));
}

TEST_CASE("group order bounds") {
  CHECK(max_group_order(-1, MixedCase::index2) == 1539);
  CHECK(max_group_order(-1, MixedCase::index3) == 4000);
  CHECK(max_group_order(-1, MixedCase::index6) == 4000);
  CHECK(max_group_order(-2, MixedCase::index2) == 2177);

  // general form with explicit types and kernels
  auto t = BranchType::parse("[2;-]");
  CHECK(max_group_order(-1, MixedCase::index2, {t, t, t}, {1, 1, 1}) == 2);
}

TEST_CASE("chern invariants") {
  auto c = chern_invariants(-1);
  CHECK(c.chi == -1);
  CHECK(c.euler == -8);
  CHECK(c.k_cubed == 48);
  c = chern_invariants(0);
  CHECK((c.chi == 0 && c.euler == 0 && c.k_cubed == 0));
  c = chern_invariants(-2);
  CHECK((c.chi == -2 && c.euler == -16 && c.k_cubed == 96));
}

TEST_CASE("param count") {
  auto t1 = BranchType::parse("[2;-]");
  auto t2 = BranchType::parse("[2;-]");
  CHECK(param_count(MixedCase::index2, t1, &t2) == 6);
  t1 = BranchType::parse("[0;2^2,4^2]");
  CHECK(param_count(MixedCase::index2, t1, &t2) == 4);
  t1 = BranchType::parse("[0;3^4]");
  CHECK(param_count(MixedCase::index3, t1, nullptr) == 1);
}

TEST_CASE("nmax table") {
  NmaxTable fallback = NmaxTable::hurwitz_only();
  CHECK(fallback.lookup(2) == 84);
  CHECK(fallback.lookup(5) == 336);
  auto t = shipped_nmax();
  CHECK(t.lookup(2) == 48);
  CHECK(t.lookup(7) == 504);
  CHECK(t.lookup(1000) == 84 * 999);  // fallback outside the table
}

TEST_CASE("admissible data, index three and six") {
  auto nmax = shipped_nmax();
  auto idx3 = admissible_numerical_data(-1, MixedCase::index3, nmax);
  CHECK(idx3.size() == 8);
  std::set<long long> orders;
  for (const auto& d : idx3) orders.insert(d.n);
  CHECK(orders == std::set<long long>{27, 216});
  // order 27 carries [0;3^4] among its types
  bool found = false;
  for (const auto& d : idx3)
    if (d.n == 27 && d.t1.str() == "[0;3^4]") found = true;
  CHECK(found);

  auto idx6 = admissible_numerical_data(-1, MixedCase::index6, nmax);
  CHECK(idx6.size() == 5);
  for (const auto& d : idx6) CHECK(d.n == 216);

  for (const auto& d : idx3) CHECK(naive_datum_check(d, -1, nmax));
  for (const auto& d : idx6) CHECK(naive_datum_check(d, -1, nmax));
}

TEST_CASE("admissible data, index two") {
  auto nmax = shipped_nmax();
  auto data = admissible_numerical_data(-1, MixedCase::index2, nmax);
  REQUIRE(!data.empty());

  long long max_n = 0;
  for (const auto& d : data) max_n = std::max(max_n, d.n);
  CHECK(max_n == 576);

  // contains the smallest classified datum
  bool found = false;
  for (const auto& d : data)
    if (d.n == 2 && d.t1.str() == "[2;-]" && d.t2 && d.t2->str() == "[2;-]") found = true;
  CHECK(found);

  // independent re-check of every constraint
  for (const auto& d : data) CHECK(naive_datum_check(d, -1, nmax));

  // deterministic and sorted
  for (size_t i = 1; i < data.size(); ++i) CHECK(data[i - 1] < data[i]);
}

TEST_CASE("hurwitz fallback gives a superset containing the classified data") {
  auto nmax = shipped_nmax();
  auto fallback = NmaxTable::hurwitz_only();

  for (auto c : {MixedCase::index2, MixedCase::index3, MixedCase::index6}) {
    auto with_table = admissible_numerical_data(-1, c, nmax);
    auto with_fallback = admissible_numerical_data(-1, c, fallback);
    std::set<std::string> super;
    for (const auto& d : with_fallback)
      super.insert(std::to_string(d.n) + d.t1.str() + (d.t2 ? d.t2->str() : ""));
    for (const auto& d : with_table)
      CHECK(super.count(std::to_string(d.n) + d.t1.str() + (d.t2 ? d.t2->str() : "")));
  }

  // every datum realized in the classified tables appears in both runs
  std::ifstream rows(std::string(TRIFOLD_TEST_DATA_DIR) + "/classification_rows.tsv");
  REQUIRE(rows.good());
  auto idx2_table = admissible_numerical_data(-1, MixedCase::index2, nmax);
  auto idx2_fb = admissible_numerical_data(-1, MixedCase::index2, fallback);
  auto idx3_table = admissible_numerical_data(-1, MixedCase::index3, nmax);
  auto idx3_fb = admissible_numerical_data(-1, MixedCase::index3, fallback);
  auto contains = [](const std::vector<NumericalDatum>& v, long long n,
                     const std::string& t1, const std::string& t2) {
    for (const auto& d : v) {
      if (d.n != n || d.t1.str() != t1) continue;
      if (t2 == "-" && !d.t2) return true;
      if (d.t2 && d.t2->str() == t2) return true;
    }
    return false;
  };
  std::string line;
  int realized = 0;
  while (std::getline(rows, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string no, case_name, group, t1, t2;
    long long order;
    in >> no >> case_name >> group >> order >> t1 >> t2;
    ++realized;
    if (case_name == "index2") {
      CHECK(contains(idx2_table, order, t1, t2));
      CHECK(contains(idx2_fb, order, t1, t2));
    } else if (case_name == "index3") {
      CHECK(contains(idx3_table, order, t1, t2));
      CHECK(contains(idx3_fb, order, t1, t2));
    }
  }
  CHECK(realized == 59);
}

TEST_CASE("deeper chi values re-verify against the naive checker") {
  auto nmax = shipped_nmax();
  for (long long chi : {-2LL, -3LL}) {
    for (auto c : {MixedCase::index2, MixedCase::index3, MixedCase::index6}) {
      auto data = admissible_numerical_data(chi, c, nmax);
      CHECK(!data.empty());
      for (const auto& d : data) {
        CHECK(naive_datum_check(d, chi, nmax));
        CHECK(d.n <= max_group_order(chi, c));
      }
      for (size_t i = 1; i < data.size(); ++i) CHECK(data[i - 1] < data[i]);
    }
  }
}
