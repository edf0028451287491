#include <doctest.h>

#include "trifold/catalog.hpp"
#include "trifold/hodge.hpp"
#include "trifold/riemann.hpp"

using namespace trifold;

namespace {

std::vector<Cyclotomic> values_per_element(const ClassFunction& chi) {
  const auto& G = *chi.group();
  std::vector<Cyclotomic> v(G.order());
  for (Elt x = 0; x < G.order(); ++x) v[x] = chi.at(x);
  return v;
}

}  // namespace

TEST_CASE("kunneth values") {
  Cyclotomic one(1);
  // all characters trivial of degree 1
  CHECK(kunneth_value(PQ::pq11, one, one, one) == Cyclotomic(9));
  // (3,0) is multiplicative in the degrees
  CHECK(kunneth_value(PQ::pq30, Cyclotomic(3), Cyclotomic(2), Cyclotomic(2)) ==
        Cyclotomic(12));
  CHECK(kunneth_value(PQ::pq10, Cyclotomic(3), Cyclotomic(2), Cyclotomic(2)) ==
        Cyclotomic(7));
}

TEST_CASE("outside table values") {
  Cyclotomic a = Cyclotomic::root_of_unity(8, 1) + Cyclotomic(1);
  Cyclotomic b = Cyclotomic::root_of_unity(8, 3);
  CHECK(outside_value_reflection(PQ::pq11, a, b) == Cyclotomic(1));
  CHECK(outside_value_reflection(PQ::pq10, a, b) == a);
  CHECK(outside_value_reflection(PQ::pq20, a, b) == -b);
  CHECK(outside_value_reflection(PQ::pq21, a, b) == -(a.conjugate() * b));
  CHECK(outside_value_reflection(PQ::pq30, a, b) == -(a * b));
  for (PQ pq : {PQ::pq10, PQ::pq11, PQ::pq20, PQ::pq21})
    CHECK(outside_value_rotation(pq, a).is_zero());
  CHECK(outside_value_rotation(PQ::pq30, a) == a);
}

TEST_CASE("kunneth restriction as a class function") {
  auto G = make_named(Family::symmetric, 3);
  auto table = character_table(G);
  const auto& chi = table.irreducibles[2];
  auto k = kunneth_restriction(chi, chi, chi, PQ::pq30);
  for (int c = 0; c < G.num_classes(); ++c)
    CHECK(k.at_class(c) == chi.at_class(c) * chi.at_class(c) * chi.at_class(c));
  CHECK(kunneth_restriction(chi, chi, chi, PQ::pq10).at_class(0) == Cyclotomic(6));
}

TEST_CASE("smallest index two diamond") {
  // G = Z2 acting with V1 of type [2;-]; the diagonal is trivial and the
  // swapped curve has genus two.
  auto G = make_named(Family::cyclic, 2);
  auto v1s = all_generating_vectors(G, BranchType::parse("[2;-]"));
  REQUIRE(!v1s.empty());

  auto triv_group = make_named(Family::cyclic, 1);
  GeneratingVector v2;
  v2.group = &triv_group;
  v2.type = BranchType::parse("[2;-]");
  v2.hyperbolic = {0, 0, 0, 0};

  MixedHodgeInput in;
  in.mixed_case = MixedCase::index2;
  in.G = &G;
  in.in_diagonal = {1, 0};
  in.witness = 1;
  in.chi1 = values_per_element(chevalley_weil(v1s.front()));
  // chi2 on the trivial subgroup: constant genus 2 at the identity
  in.chi2 = {Cyclotomic(2), Cyclotomic(0)};

  auto d = hodge_diamond_mixed(in);
  CHECK(d == HodgeDiamond{5, 7, 4, 18, 24});
  CHECK(d.chi() == -1);
  CHECK(d.euler_via_betti() == -8);
  CHECK(d.str() == "(5,7,4,18,24)");

  // witness must lie outside the diagonal
  in.witness = 0;
  CHECK_THROWS_AS(hodge_diamond_mixed(in), ElementInDiagonal);
}

TEST_CASE("rigid unmixed example") {
  // Z5 x Z5 with two Beauville vectors and an inflated genus-two action.
  auto z5 = make_named(Family::cyclic, 5);
  auto G = direct_product(z5, z5);

  auto mk = [&](std::vector<Elt> elems) {
    GeneratingVector v;
    v.group = &G;
    v.type = BranchType::parse("[0;5^3]");
    v.elliptic = std::move(elems);
    REQUIRE(v.is_valid());
    return v;
  };
  auto v1 = mk({5 * 0 + 3, 5 * 3 + 3, 5 * 2 + 4});
  auto v2 = mk({5 * 2 + 0, 5 * 2 + 1, 5 * 1 + 4});

  GeneratingVector v3;
  v3.group = &z5;
  v3.type = BranchType::parse("[0;5^3]");
  v3.elliptic = {1, 1, 3};
  REQUIRE(v3.is_valid());

  auto chi1 = values_per_element(chevalley_weil(v1));
  auto chi2 = values_per_element(chevalley_weil(v2));
  // inflate chi3 along the first projection
  auto chi3_small = chevalley_weil(v3);
  std::vector<Cyclotomic> chi3(G.order());
  for (Elt a = 0; a < 5; ++a)
    for (Elt b = 0; b < 5; ++b) chi3[5 * a + b] = chi3_small.at(a);

  auto d = hodge_diamond_unmixed(G, chi1, chi2, chi3);
  CHECK(d == HodgeDiamond{3, 1, 0, 5, 9});
  CHECK(d.chi() == -1);
  CHECK(d.euler_via_betti() == -8);
}
