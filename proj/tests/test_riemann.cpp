#include <doctest.h>

#include <algorithm>

#include "trifold/catalog.hpp"
#include "trifold/riemann.hpp"

using namespace trifold;

namespace {

GroupTable cyclic(int n) { return make_named(Family::cyclic, n); }

// Exhaustive Cartesian-product oracle, no pruning.
std::vector<GeneratingVector> naive_vectors(const GroupTable& H, const BranchType& T) {
  const int len = T.r() + 2 * T.g_prime;
  std::vector<GeneratingVector> out;
  std::vector<Elt> tuple(len, 0);
  while (true) {
    GeneratingVector v;
    v.group = &H;
    v.type = T;
    v.elliptic.assign(tuple.begin(), tuple.begin() + T.r());
    v.hyperbolic.assign(tuple.begin() + T.r(), tuple.end());
    if (v.is_valid()) out.push_back(v);
    int i = len - 1;
    while (i >= 0 && tuple[i] == H.order() - 1) tuple[i--] = 0;
    if (i < 0) break;
    ++tuple[i];
  }
  return out;
}

}  // namespace

TEST_CASE("branch type parse and print") {
  for (const char* s : {"[0;2^2,4^2]", "[2;-]", "[0;5^3]", "[1;2^2]", "[0;2,4,8]",
                        "[0;3,6^2]", "[0;2^3,3]", "[1;2]", "[0;3^4]", "[3;-]"}) {
    auto t = BranchType::parse(s);
    CHECK(t.str() == s);
  }
  auto t = BranchType::parse("[0;4,2,4,2]");
  CHECK(t.str() == "[0;2^2,4^2]");
  CHECK(t.orders == std::vector<int>{2, 2, 4, 4});
  CHECK_THROWS_AS(BranchType::parse("[0;1^2]"), ParseError);
  CHECK_THROWS_AS(BranchType::parse("0;2"), ParseError);
  CHECK_THROWS_AS(BranchType::parse("[-1;2]"), ParseError);
  CHECK_THROWS_AS(BranchType::parse("[0;]"), ParseError);
}

TEST_CASE("hurwitz genus") {
  CHECK(hurwitz_genus(2, 1, BranchType::parse("[2;-]")) == 3);
  CHECK(hurwitz_genus(1, 1, BranchType::parse("[5;-]")) == 5);
  CHECK(hurwitz_genus(4, 1, BranchType::parse("[0;2^2,4^2]")) == 2);
  CHECK(hurwitz_genus(9, 1, BranchType::parse("[0;3^4]")) == 4);
  CHECK(hurwitz_genus(5, 1, BranchType::parse("[0;5^3]")) == 2);
  CHECK(hurwitz_genus(8, 1, BranchType::parse("[0;4^3]")) == 2);
  // (n=1528, k=1, [0;2,3,7]): 1528/2 * 1/42 is not integral
  CHECK_FALSE(hurwitz_genus(1528, 1, BranchType::parse("[0;2,3,7]")).has_value());
  // kernel order scales the acting group
  CHECK(hurwitz_genus(50, 2, BranchType::parse("[0;5^3]")) == 6);
}

TEST_CASE("generating vector enumeration counts") {
  CHECK(count_generating_vectors(cyclic(5), BranchType::parse("[0;5^3]")) == 12);
  CHECK(count_generating_vectors(cyclic(1), BranchType::parse("[2;-]")) == 1);
  CHECK(count_generating_vectors(cyclic(2), BranchType::parse("[0;2^3]")) == 0);
  CHECK(exists_generating_vector(cyclic(5), BranchType::parse("[0;5^3]")));
  CHECK_FALSE(exists_generating_vector(cyclic(2), BranchType::parse("[0;2^3]")));
}

TEST_CASE("enumeration equals the naive Cartesian filter") {
  auto cat = Catalog::with_builtins();
  struct Case { const char* group; const char* type; };
  const Case cases[] = {
      {"Z5", "[0;5^3]"},   {"Z2^2", "[0;2^3]"},  {"S3", "[0;2^2,3]"},
      {"Z8", "[0;2,8^2]"}, {"Q8", "[0;4^3]"},    {"Z4", "[1;2]"},
      {"Z2", "[2;-]"},     {"S3", "[1;2]"},      {"Z6", "[0;2^2,3^2]"},
      {"Z2^2", "[1;2^2]"}, {"D4", "[0;2^2,4]"},  {"Z3^2", "[0;3^4]"}};
  for (const auto& c : cases) {
    const auto* entry = [&]() {
      for (const auto& e : cat.all())
        if (e.name == c.group) return &e;
      return static_cast<const CatalogEntry*>(nullptr);
    }();
    REQUIRE(entry != nullptr);
    auto T = BranchType::parse(c.type);
    auto fast = all_generating_vectors(entry->group, T);
    auto slow = naive_vectors(entry->group, T);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) {
      CHECK(fast[i].elliptic == slow[i].elliptic);
      CHECK(fast[i].hyperbolic == slow[i].hyperbolic);
    }
    for (const auto& v : fast) CHECK(v.is_valid());
  }
}

TEST_CASE("stabilizer sets") {
  // unramified type: trivial stabilizer
  auto s3 = make_named(Family::symmetric, 3);
  auto vs = all_generating_vectors(s3, BranchType::parse("[2;-]"));
  REQUIRE(!vs.empty());
  for (const auto& v : vs) CHECK(stabilizer_set(v).is_identity_only());

  // Z5 x Z5 Beauville vector: three lines, 13 elements
  auto z5 = cyclic(5);
  auto z25 = direct_product(z5, z5);
  GeneratingVector v1;
  v1.group = &z25;
  v1.type = BranchType::parse("[0;5^3]");
  v1.elliptic = {5 * 0 + 3, 5 * 3 + 3, 5 * 2 + 4};
  REQUIRE(v1.is_valid());
  auto sigma = stabilizer_set(v1);
  CHECK(sigma.count() == 13);

  // conjugation invariance
  for (Elt g = 0; g < z25.order(); ++g)
    for (Elt x = 0; x < z25.order(); ++x)
      if (sigma.contains(x)) CHECK(sigma.contains(z25.conj(g, x)));

  // preimage under the first projection of the full stabilizer of Z5
  GeneratingVector v3;
  v3.group = &z5;
  v3.type = BranchType::parse("[0;5^3]");
  v3.elliptic = {1, 1, 3};
  REQUIRE(v3.is_valid());
  auto sigma_bar = stabilizer_set(v3);
  CHECK(sigma_bar.count() == 5);
  std::vector<Elt> proj(z25.order());
  for (Elt a = 0; a < 5; ++a)
    for (Elt b = 0; b < 5; ++b) proj[5 * a + b] = a;
  auto pre = preimage_stabilizer(z25, proj, sigma_bar);
  CHECK(pre.count() == 25);
}

TEST_CASE("fixed point counts") {
  auto z5 = cyclic(5);
  GeneratingVector v;
  v.group = &z5;
  v.type = BranchType::parse("[0;5^3]");
  v.elliptic = {1, 1, 3};
  REQUIRE(v.is_valid());
  for (Elt h = 1; h < 5; ++h) CHECK(fixed_point_count(v, h) == 3);
  CHECK_THROWS_AS(fixed_point_count(v, 0), IdentityElement);

  auto s3 = make_named(Family::symmetric, 3);
  auto vs = all_generating_vectors(s3, BranchType::parse("[2;-]"));
  REQUIRE(!vs.empty());
  for (Elt h = 1; h < 6; ++h) CHECK(fixed_point_count(vs.front(), h) == 0);
}

TEST_CASE("chevalley-weil character") {
  // trivial group, genus 2: constant character 2
  auto z1 = cyclic(1);
  GeneratingVector triv;
  triv.group = &z1;
  triv.type = BranchType::parse("[2;-]");
  triv.hyperbolic = {0, 0, 0, 0};
  REQUIRE(triv.is_valid());
  auto chi0 = chevalley_weil(triv);
  CHECK(chi0.at(0) == Cyclotomic(2));

  // Z5, V = (1,1,3): degree 2, real part -1/2 away from the identity
  auto z5 = cyclic(5);
  GeneratingVector v;
  v.group = &z5;
  v.type = BranchType::parse("[0;5^3]");
  v.elliptic = {1, 1, 3};
  auto chi = chevalley_weil(v);
  CHECK(chi.at(0) == Cyclotomic(2));
  for (Elt h = 1; h < 5; ++h)
    CHECK(chi.at(h).real_part() == Cyclotomic(Rational(-1, 2)));

  // unramified: trivial + (g'-1) * regular
  auto s3 = make_named(Family::symmetric, 3);
  auto vs = all_generating_vectors(s3, BranchType::parse("[2;-]"));
  REQUIRE(!vs.empty());
  auto expected = trivial_character(s3) + regular_character(s3);
  for (const auto& w : vs) CHECK(chevalley_weil(w) == expected);
}

TEST_CASE("chevalley-weil invariants over a corpus") {
  auto cat = Catalog::with_builtins();
  struct Case { const char* group; const char* type; };
  const Case cases[] = {{"Z5", "[0;5^3]"},  {"S3", "[0;2^2,3^2]"}, {"Q8", "[0;4^3]"},
                        {"D4", "[0;2^2,4^2]"}, {"Z3^2", "[0;3^4]"}, {"Z4", "[1;2]"},
                        {"Z6", "[0;2^2,3^2]"}, {"Z2^2", "[1;2^2]"}, {"Z8", "[0;2,8^2]"},
                        {"S3", "[1;2]"}, {"Dic12", "[0;3,4^2]"}};
  for (const auto& c : cases) {
    const CatalogEntry* entry = nullptr;
    for (const auto& e : cat.all())
      if (e.name == c.group) entry = &e;
    REQUIRE(entry != nullptr);
    const auto& H = entry->group;
    auto T = BranchType::parse(c.type);
    auto vectors = all_generating_vectors(H, T);
    if (vectors.empty()) continue;
    auto table = character_table(H);
    auto genus = hurwitz_genus(H.order(), 1, T);
    REQUIRE(genus.has_value());
    size_t checked = 0;
    for (const auto& w : vectors) {
      if (++checked > 40) break;  // corpus sampling, deterministic prefix
      auto chi = chevalley_weil(w);
      // degree is the genus
      CHECK(chi.at(0) == Cyclotomic(*genus));
      // invariant dimension: <chi, triv> = g'
      CHECK(chi.inner_product(trivial_character(H)) == Rational(T.g_prime));
      // Lefschetz: chi(h) + conj(chi(h)) = 2 - F(h) for h != 1
      for (Elt h = 1; h < H.order(); ++h)
        CHECK(chi.at(h) + chi.at(h).conjugate() ==
              Cyclotomic(2 - fixed_point_count(w, h)));
      // multiplicity form agrees exactly
      CHECK(chevalley_weil_from_table(w, table) == chi);
    }
  }
}
