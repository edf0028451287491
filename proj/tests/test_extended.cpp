#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "trifold/pipeline.hpp"

using namespace trifold;

// Classification beyond the built-in catalog range, driven by imported
// complete catalogs for orders 18, 20 and 24.

namespace {

const std::string kTestData = TRIFOLD_TEST_DATA_DIR;
const std::string kData = TRIFOLD_DATA_DIR;

Catalog extended_catalog() {
  auto cat = Catalog::with_builtins();
  cat.import_file(kTestData + "/catalog_18.cat");
  cat.import_file(kTestData + "/catalog_20.cat");
  cat.import_file(kTestData + "/catalog_24.cat");
  return cat;
}

std::multiset<std::string> fixture_keys(long long min_order, long long max_order) {
  std::ifstream in(kTestData + "/classification_rows_extended.tsv");
  REQUIRE(in.good());
  std::multiset<std::string> keys;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string no, case_name, group, t1, t2;
    long long order, h30, h20, h10, h11, h12, d;
    is >> no >> case_name >> group >> order >> t1 >> t2 >> h30 >> h20 >> h10 >> h11 >>
        h12 >> d;
    if (order < min_order || order > max_order) continue;
    keys.insert(group + "|" + t1 + "|" + t2 + "|(" + std::to_string(h30) + "," +
                std::to_string(h20) + "," + std::to_string(h10) + "," +
                std::to_string(h11) + "," + std::to_string(h12) + ")|" +
                std::to_string(d));
  }
  return keys;
}

std::multiset<std::string> result_keys(const std::vector<ClassifiedRow>& rows) {
  std::multiset<std::string> keys;
  for (const auto& r : rows)
    keys.insert(r.group_name + "|" + r.t1.str() + "|" +
                (r.t2 ? r.t2->str() : std::string("-")) + "|" + r.diamond.str() + "|" +
                std::to_string(r.d));
  return keys;
}

}  // namespace

TEST_CASE("imported catalogs carry the full censuses") {
  auto cat = extended_catalog();
  CHECK(cat.is_complete(18));
  CHECK(cat.is_complete(20));
  CHECK(cat.is_complete(24));
  CHECK(cat.complete_catalog(18).size() == 5);
  CHECK(cat.complete_catalog(20).size() == 5);
  CHECK(cat.complete_catalog(24).size() == 15);
}

TEST_CASE("index two classification through order 24 matches the table") {
  auto cat = extended_catalog();
  auto nmax = NmaxTable::load(kData + "/nmax.tsv");
  auto result = classify(-1, MixedCase::index2, 17, 24, cat, nmax, 2);
  CHECK(result.unresolved_orders.empty());

  // no rows at order 18; rows 59..79 at orders 20 and 24
  for (const auto& r : result.rows) CHECK(r.order != 18);
  CHECK(result_keys(result.rows) == fixture_keys(17, 24));
  CHECK(result.rows.size() == 21);
}

TEST_CASE("a positive index six classification") {
  // chi = -12 admits the order-18 datum [2;-]; the dihedral group of order
  // 18 carries a non-split symmetric extension over its order-3 center and
  // every unramified vector on G1 passes the freeness conditions.
  auto cat = extended_catalog();
  auto nmax = NmaxTable::load(kData + "/nmax.tsv");
  auto result = classify(-12, MixedCase::index6, 1, 18, cat, nmax, 1);

  REQUIRE(result.rows.size() == 1);
  const auto& row = result.rows[0];
  CHECK(row.group_name == "D9");
  CHECK(row.order == 18);
  CHECK(row.t1.str() == "[2;-]");
  CHECK(row.diamond == HodgeDiamond{16, 5, 2, 18, 57});
  CHECK(row.d == 3);
  CHECK(row.diamond.chi() == -12);
  CHECK(row.diamond.euler_via_betti() == -96);
  CHECK(result.unresolved_orders.empty());

  // worker-count determinism on the imported-catalog path
  auto result2 = classify(-12, MixedCase::index6, 1, 18, cat, nmax, 2);
  REQUIRE(result2.rows.size() == 1);
  CHECK(result2.rows[0].witnesses == row.witnesses);
  CHECK(result2.rows[0].diamond == row.diamond);
}

TEST_CASE("index three classification with the same imports stays consistent") {
  // chi = -12 also admits index-three data at order 18; D9's A3-kernel
  // sequence is non-split over Z9 but conjugation fixes every stabilizer
  // set, so candidate vectors must be filtered by the triple intersection.
  auto cat = extended_catalog();
  auto nmax = NmaxTable::load(kData + "/nmax.tsv");
  auto result = classify(-12, MixedCase::index3, 1, 18, cat, nmax, 1);
  for (const auto& r : result.rows) {
    CHECK(r.diamond.chi() == -12);
    CHECK(r.diamond.euler_via_betti() == -96);
  }
  CHECK(result.unresolved_orders.empty());
}

TEST_CASE("tau and h representative independence in index six") {
  auto cat = extended_catalog();
  const CatalogEntry* d9 = nullptr;
  for (const auto& e : cat.all())
    if (e.name == "D9") d9 = &e;
  REQUIRE(d9 != nullptr);
  const auto& G = d9->group;

  Subgroup g0;
  bool have = false;
  for (auto& c : normal_subgroups_of_index(G, 6)) {
    auto [Q, images] = quotient(G, c);
    (void)images;
    if (Q.is_abelian()) continue;
    if (is_split_extension(G, c)) continue;
    g0 = c;
    have = true;
  }
  REQUIRE(have);
  CHECK(g0.order() == 3);

  std::vector<char> in_diag(G.order(), 0);
  for (Elt m : g0.members) in_diag[m] = 1;

  std::optional<HodgeDiamond> ref;
  for (Elt tau = 0; tau < G.order(); ++tau) {
    if (g0.contains(tau) || g0.contains(G.mul(tau, tau))) continue;
    for (Elt h = 0; h < G.order(); ++h) {
      if (g0.contains(h) || !g0.contains(G.mul(h, h))) continue;
      std::vector<Elt> seed = g0.members;
      seed.push_back(h);
      Subgroup g1 = subgroup_generated_by(G, seed);
      REQUIRE(g1.order() == 6);
      auto [h1, embed] = g1.to_group();
      auto vectors = all_generating_vectors(h1, BranchType::parse("[2;-]"));
      REQUIRE(!vectors.empty());
      const auto& v = vectors.front();
      auto ss = stabilizer_set(v);
      ElementSet sigma(G.order());
      for (Elt x = 0; x < h1.order(); ++x)
        if (ss.contains(x)) sigma.insert(embed[x]);
      CHECK(free_index6(G, g0, g1, sigma, tau, h));

      auto chi = chevalley_weil(v);
      MixedHodgeInput in;
      in.mixed_case = MixedCase::index6;
      in.G = &G;
      in.in_diagonal = in_diag;
      in.witness = tau;
      in.h_elt = h;
      in.chi1.assign(G.order(), Cyclotomic(0));
      for (Elt x = 0; x < h1.order(); ++x) in.chi1[embed[x]] = chi.at(x);
      auto dm = hodge_diamond_mixed(in);
      if (ref)
        CHECK(*ref == dm);
      else
        ref = dm;
    }
  }
  REQUIRE(ref.has_value());
  CHECK(*ref == HodgeDiamond{16, 5, 2, 18, 57});
}
