#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "trifold/groups.hpp"

using namespace trifold;

namespace {

GroupTable cyclic(int n) {
  std::vector<int> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return from_permutation_generators({rot});
}

GroupTable sym3() { return from_permutation_generators({{1, 2, 0}, {0, 2, 1}}); }

GroupTable quaternion8() {
  // i and j acting on the 8 unit quaternions {1,-1,i,-i,j,-j,k,-k}
  // indexed 0..7 by left multiplication.
  //            1  -1   i  -i   j  -j   k  -k
  std::vector<int> mi{2, 3, 1, 0, 6, 7, 5, 4};  // i*x
  std::vector<int> mj{4, 5, 7, 6, 1, 0, 2, 3};  // j*x
  return from_permutation_generators({mi, mj});
}

GroupTable dihedral4() {
  return from_permutation_generators({{1, 2, 3, 0}, {0, 3, 2, 1}});
}

// Brute-force conjugacy classes, independent of the GroupTable cache.
std::vector<std::vector<Elt>> brute_classes(const GroupTable& G) {
  std::vector<std::vector<Elt>> out;
  std::vector<char> done(G.order(), 0);
  for (Elt x = 0; x < G.order(); ++x) {
    if (done[x]) continue;
    std::set<Elt> cls;
    for (Elt g = 0; g < G.order(); ++g) cls.insert(G.conj(g, x));
    std::vector<Elt> v(cls.begin(), cls.end());
    for (Elt y : v) done[y] = 1;
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("closure of permutation generators") {
  auto z2 = from_permutation_generators({{1, 0}});
  CHECK(z2.order() == 2);

  auto s3 = sym3();
  CHECK(s3.order() == 6);

  auto triv = from_permutation_generators({{0, 1, 2}});
  CHECK(triv.order() == 1);

  CHECK_THROWS_AS(from_permutation_generators({{0, 0}}), InvalidPermutation);
  CHECK_THROWS_AS(from_permutation_generators({{1, 2, 0}}, 2), OrderExceedsCap);
}

TEST_CASE("group axioms hold on constructed tables") {
  for (const auto& G : {cyclic(7), sym3(), quaternion8(), dihedral4()}) {
    for (Elt a = 0; a < G.order(); ++a) {
      CHECK(G.mul(a, G.inv(a)) == GroupTable::id);
      CHECK(G.mul(G.inv(a), a) == GroupTable::id);
      CHECK(G.order() % G.element_order(a) == 0);
    }
  }
}

TEST_CASE("conjugacy classes") {
  auto z2 = cyclic(2);
  CHECK(z2.num_classes() == 2);

  auto s3 = sym3();
  auto expect = brute_classes(s3);
  CHECK(s3.num_classes() == static_cast<int>(expect.size()));
  std::vector<int> sizes;
  for (int c = 0; c < s3.num_classes(); ++c) sizes.push_back(s3.class_size(c));
  CHECK(sizes == std::vector<int>{1, 3, 2});

  auto q8 = quaternion8();
  std::vector<int> q8_sizes;
  for (int c = 0; c < q8.num_classes(); ++c) q8_sizes.push_back(q8.class_size(c));
  std::sort(q8_sizes.begin(), q8_sizes.end());
  CHECK(q8_sizes == std::vector<int>{1, 1, 2, 2, 2});

  // identity alone in the first class; sizes divide |G|, sum to |G|
  for (const auto& G : {sym3(), quaternion8(), dihedral4(), cyclic(12)}) {
    CHECK(G.conjugacy_classes().front() == std::vector<Elt>{0});
    int total = 0;
    for (int c = 0; c < G.num_classes(); ++c) {
      CHECK(G.order() % G.class_size(c) == 0);
      total += G.class_size(c);
    }
    CHECK(total == G.order());
  }
}

TEST_CASE("centralizer") {
  auto z6 = cyclic(6);
  for (Elt x = 0; x < 6; ++x) CHECK(centralizer(z6, x).order() == 6);

  auto s3 = sym3();
  for (Elt x = 0; x < 6; ++x) {
    auto c = centralizer(s3, x);
    int expected = 0;
    for (Elt g = 0; g < 6; ++g)
      if (s3.mul(g, x) == s3.mul(x, g)) ++expected;
    CHECK(c.order() == expected);
    if (s3.element_order(x) == 2) CHECK(c.order() == 2);
  }
  CHECK(centralizer(s3, 0).order() == 6);
}

TEST_CASE("normal subgroups of given index") {
  auto z4 = cyclic(4);
  auto subs = normal_subgroups_of_index(z4, 2);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].members == std::vector<Elt>{0, z4.mul(1, 1)});

  auto s3 = sym3();
  auto idx2 = normal_subgroups_of_index(s3, 2);
  REQUIRE(idx2.size() == 1);
  CHECK(idx2[0].order() == 3);
  CHECK(idx2[0].is_normal());

  CHECK(normal_subgroups_of_index(cyclic(2), 3).empty());
}

TEST_CASE("quotient and projection") {
  auto z4 = cyclic(4);
  auto n = normal_subgroups_of_index(z4, 2)[0];
  auto [q, images] = quotient(z4, n);
  CHECK(q.order() == 2);

  auto s3 = sym3();
  auto a3 = normal_subgroups_of_index(s3, 2)[0];
  auto [q2, im2] = quotient(s3, a3);
  CHECK(q2.order() == 2);
  for (Elt x = 0; x < 6; ++x) {
    bool in_a3 = a3.contains(x);
    CHECK(im2[x] == (in_a3 ? 0 : 1));
  }
  // projection is a surjective hom with kernel N
  GroupHom pi{&s3, &q2, im2};
  CHECK(pi.verify());
  CHECK(pi.kernel() == a3.members);

  auto whole = subgroup_generated_by(s3, {1, 2, 3, 4, 5});
  auto [q3, im3] = quotient(s3, whole);
  CHECK(q3.order() == 1);

  Subgroup not_normal;
  not_normal.parent = &s3;
  not_normal.members = s3.closure({[&] {
    for (Elt x = 1; x < 6; ++x)
      if (s3.element_order(x) == 2) return x;
    return 1;
  }()});
  CHECK_THROWS_AS(quotient(s3, not_normal), NotNormal);
}

TEST_CASE("split extensions") {
  auto s3 = sym3();
  auto a3 = normal_subgroups_of_index(s3, 2)[0];
  CHECK(is_split_extension(s3, a3));

  auto z9 = cyclic(9);
  auto n3 = normal_subgroups_of_index(z9, 3);
  REQUIRE(n3.size() == 1);
  CHECK_FALSE(is_split_extension(z9, n3[0]));
}

TEST_CASE("subgroup materialization") {
  auto s3 = sym3();
  auto a3 = normal_subgroups_of_index(s3, 2)[0];
  auto [h, embed] = a3.to_group();
  CHECK(h.order() == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Elt parent = s3.mul(embed[a], embed[b]);
      auto it = std::find(embed.begin(), embed.end(), parent);
      REQUIRE(it != embed.end());
      CHECK(h.mul(a, b) == static_cast<Elt>(it - embed.begin()));
    }
}

TEST_CASE("isomorphism testing") {
  auto z4 = cyclic(4);
  auto klein = from_permutation_generators({{1, 0, 2, 3}, {0, 1, 3, 2}});
  CHECK_FALSE(isomorphism(z4, klein).has_value());

  auto s3 = sym3();
  auto s3b = from_permutation_generators({{0, 2, 1}, {2, 1, 0}});
  auto f = isomorphism(s3, s3b);
  REQUIRE(f.has_value());
  CHECK(f->verify());
  CHECK(f->is_bijective());

  auto self = isomorphism(s3, s3);
  REQUIRE(self.has_value());
  std::vector<Elt> ident(6);
  std::iota(ident.begin(), ident.end(), 0);
  CHECK(self->images == ident);

  CHECK_FALSE(isomorphism(dihedral4(), quaternion8()).has_value());

  // Z3 x Z2 is cyclic of order 6
  auto z6 = cyclic(6);
  auto z3xz2 = from_permutation_generators({{1, 2, 0, 3, 4}, {0, 1, 2, 4, 3}});
  CHECK(isomorphism(z6, z3xz2).has_value());
}

TEST_CASE("element sets") {
  ElementSet s(70);
  s.insert(0);
  s.insert(69);
  CHECK(s.count() == 2);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(5));
  ElementSet t(70);
  t.insert(0);
  CHECK((s & t).is_identity_only());
  CHECK((s | t).count() == 2);
}

TEST_CASE("split extensions agree with exhaustive complement search") {
  // oracle: a complement of order k exists iff some <=2-generated subgroup
  // of order k meets N trivially
  auto has_complement = [](const GroupTable& G, const Subgroup& N) {
    const int k = G.order() / N.order();
    for (Elt a = 0; a < G.order(); ++a)
      for (Elt b = a; b < G.order(); ++b) {
        auto H = G.closure({a, b});
        if (static_cast<int>(H.size()) != k) continue;
        bool trivial_meet = true;
        for (Elt x : H)
          if (x != GroupTable::id && N.contains(x)) { trivial_meet = false; break; }
        if (trivial_meet) return true;
      }
    return false;
  };

  std::vector<GroupTable> corpus;
  corpus.push_back(cyclic(9));
  corpus.push_back(cyclic(12));
  corpus.push_back(sym3());
  corpus.push_back(dihedral4());
  corpus.push_back(quaternion8());
  corpus.push_back(from_permutation_generators({{1, 2, 3, 0}, {1, 0, 2, 3}}));  // S4
  corpus.push_back(from_permutation_generators(
      {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {0, 1, 2, 3, 5, 4}}));  // Z3xS3-ish
  for (const auto& G : corpus) {
    for (int k : {2, 3, 6}) {
      if (G.order() % k) continue;
      for (const auto& N : normal_subgroups_of_index(G, k))
        CHECK(is_split_extension(G, N) == has_complement(G, N));
    }
  }
}

TEST_CASE("found isomorphisms invert to homomorphisms") {
  auto s3 = sym3();
  auto s3b = from_permutation_generators({{0, 2, 1}, {2, 1, 0}});
  auto f = isomorphism(s3, s3b);
  REQUIRE(f.has_value());
  GroupHom inv;
  inv.source = &s3b;
  inv.target = &s3;
  inv.images.resize(6);
  for (Elt x = 0; x < 6; ++x) inv.images[f->images[x]] = x;
  CHECK(inv.verify());
  CHECK(inv.is_bijective());
}
