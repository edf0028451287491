#include <doctest.h>

#include <algorithm>
#include <set>

#include "trifold/characters.hpp"

using namespace trifold;

namespace {

GroupTable cyclic(int n) {
  std::vector<int> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return from_permutation_generators({rot});
}

GroupTable sym3() { return from_permutation_generators({{1, 2, 0}, {0, 2, 1}}); }
GroupTable sym4() { return from_permutation_generators({{1, 2, 3, 0}, {1, 0, 2, 3}}); }
GroupTable alt4() { return from_permutation_generators({{1, 2, 0, 3}, {1, 0, 3, 2}}); }
GroupTable dihedral(int n) {
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return from_permutation_generators({rot, refl});
}
GroupTable quaternion8() {
  std::vector<int> mi{2, 3, 1, 0, 6, 7, 5, 4};
  std::vector<int> mj{4, 5, 7, 6, 1, 0, 2, 3};
  return from_permutation_generators({mi, mj});
}

void check_orthogonality(const GroupTable& G, const CharacterTable& t) {
  const int r = G.num_classes();
  REQUIRE(static_cast<int>(t.irreducibles.size()) == r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational ip = t.irreducibles[i].inner_product(t.irreducibles[j]);
      CHECK(ip == Rational(i == j ? 1 : 0));
    }
  // column orthogonality
  for (int c = 0; c < r; ++c)
    for (int d = 0; d < r; ++d) {
      Cyclotomic acc(0);
      for (int i = 0; i < r; ++i)
        acc += t.irreducibles[i].at_class(c) *
               t.irreducibles[i].at_class(d).conjugate();
      Cyclotomic expect(c == d ? Rational(G.order(), G.class_size(c)) : Rational(0));
      CHECK(acc == expect);
    }
  long long sum_sq = 0;
  for (long long deg : t.degrees) {
    CHECK(G.order() % deg == 0);
    sum_sq += deg * deg;
  }
  CHECK(sum_sq == G.order());
  CHECK(t.irreducibles[0] == trivial_character(G));
}

}  // namespace

TEST_CASE("character table of Z2") {
  auto G = cyclic(2);
  auto t = character_table(G);
  REQUIRE(t.irreducibles.size() == 2);
  CHECK(t.irreducibles[0].at(0) == Cyclotomic(1));
  CHECK(t.irreducibles[0].at(1) == Cyclotomic(1));
  CHECK(t.irreducibles[1].at(0) == Cyclotomic(1));
  CHECK(t.irreducibles[1].at(1) == Cyclotomic(-1));
}

TEST_CASE("character table of S3") {
  auto G = sym3();
  auto t = character_table(G);
  CHECK(t.degrees == std::vector<long long>{1, 1, 2});
  const auto& chi2 = t.irreducibles[2];
  CHECK(chi2.at_class(0) == Cyclotomic(2));
  // class order: identity, transpositions (order 2), 3-cycles (order 3)
  CHECK(chi2.at_class(1) == Cyclotomic(0));
  CHECK(chi2.at_class(2) == Cyclotomic(-1));
  check_orthogonality(G, t);
}

TEST_CASE("character table of Q8") {
  auto G = quaternion8();
  auto t = character_table(G);
  CHECK(t.degrees == std::vector<long long>{1, 1, 1, 1, 2});
  check_orthogonality(G, t);
}

TEST_CASE("orthogonality across a corpus") {
  std::vector<GroupTable> corpus;
  corpus.push_back(cyclic(1));
  corpus.push_back(cyclic(7));
  corpus.push_back(cyclic(12));
  corpus.push_back(sym4());
  corpus.push_back(alt4());
  corpus.push_back(dihedral(5));
  corpus.push_back(dihedral(8));
  for (const auto& G : corpus) {
    auto t = character_table(G);
    check_orthogonality(G, t);
    CHECK(static_cast<int>(t.irreducibles.size()) == G.num_classes());
  }
}

TEST_CASE("abelian tables match the dual group") {
  for (int n : {3, 4, 6, 8}) {
    auto G = cyclic(n);
    auto t = character_table(G);
    for (long long d : t.degrees) CHECK(d == 1);
    // each character is x -> z^(jx) for some j; collect j values
    std::set<int> exps;
    for (const auto& chi : t.irreducibles) {
      for (int j = 0; j < n; ++j) {
        bool match = true;
        for (Elt x = 0; x < n && match; ++x) {
          Elt gx = G.pow(1, x);  // element 1 generates by construction
          if (chi.at(gx) != Cyclotomic::root_of_unity(n, static_cast<long long>(j) * x))
            match = false;
        }
        if (match) { exps.insert(j); break; }
      }
    }
    CHECK(static_cast<int>(exps.size()) == n);
  }
}

TEST_CASE("class function operations") {
  auto G = sym3();
  auto t = character_table(G);
  const auto& chi = t.irreducibles[2];

  // translate by an inner automorphism fixes any class function
  for (Elt g = 0; g < G.order(); ++g) {
    std::vector<Elt> conj_map(G.order());
    for (Elt x = 0; x < G.order(); ++x) conj_map[x] = G.conj(g, x);
    CHECK(chi.translated(conj_map) == chi);
  }

  auto re = chi.real_part();
  for (int c = 0; c < G.num_classes(); ++c)
    CHECK(re.at_class(c) ==
          (chi.at_class(c) + chi.at_class(c).conjugate()) / Cyclotomic(2));

  CHECK(trivial_character(G).inner_product(regular_character(G)) == Rational(1));
  CHECK(chi.inner_product(regular_character(G)) == Rational(2));

  // restriction to A3
  auto a3 = normal_subgroups_of_index(G, 2)[0];
  auto [H, embed] = a3.to_group();
  auto res = chi.restricted(H, embed);
  CHECK(res.at_class(0) == Cyclotomic(2));

  auto z5 = cyclic(5);
  auto t5 = character_table(z5);
  CHECK_THROWS_AS((void)chi.inner_product(t5.irreducibles[0]), GroupMismatch);
}

TEST_CASE("cap is enforced") {
  auto G = cyclic(6);
  CHECK_THROWS_AS(character_table(G, 5), CapExceeded);
}
