#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trifold/catalog.hpp"
#include "trifold/hodge.hpp"
#include "trifold/numdata.hpp"
#include "trifold/riemann.hpp"

namespace trifold {

// Freeness conditions for the three mixed cases. All stabilizer sets are
// given as element sets of G (pre-images under the kernel quotients when
// the action is not faithful).

// i)  sigma1 and sigma2 and delta sigma2 delta^-1 = {1}
// ii) (delta g)^2 not in sigma2 whenever delta g lies in sigma1
bool free_index2(const GroupTable& G, const Subgroup& G0, const ElementSet& sigma1,
                 const ElementSet& sigma2, Elt delta);

// i) sigma1 and tau sigma1 tau^-1 and tau^2 sigma1 tau^-2 = {1}
// (the cube condition is equivalent to non-splitness, checked by callers)
bool free_index3(const GroupTable& G, const Subgroup& G0, const ElementSet& sigma1,
                 Elt tau);

// i) as index three, ii) (tau g)^3 not in sigma1 for g in G0,
// iii) tau f^2 tau^-1 not in sigma1 for f in (G1 \ G0) and sigma1
bool free_index6(const GroupTable& G, const Subgroup& G0, const Subgroup& G1,
                 const ElementSet& sigma1, Elt tau, Elt h);

struct ClassifiedRow {
  MixedCase mixed_case = MixedCase::index2;
  std::string group_name;
  std::string external_id;  // "a,b" or "-"
  long long order = 0;
  BranchType t1;
  std::optional<BranchType> t2;
  HodgeDiamond diamond;
  long long d = 0;
  long long witnesses = 0;  // number of algebraic data that produced the row

  // dedup key: isomorphism class (by catalog name), types, diamond, d
  friend bool operator<(const ClassifiedRow& a, const ClassifiedRow& b);
};

struct ClassifyResult {
  std::vector<ClassifiedRow> rows;
  std::vector<long long> unresolved_orders;  // sorted, unique
};

// Part 2 of the classification. Orders whose groups cannot be listed
// completely are reported in unresolved_orders; when only the index-two/
// index-three "Step 1" side is listable and the filter eliminates every
// candidate subgroup, the order is resolved as empty instead.
ClassifyResult classify(long long chi, MixedCase mixed_case, long long min_order,
                        long long max_order, const Catalog& catalog,
                        const NmaxTable& nmax, int jobs = 1);

// Unmixed verification path. Each curve action is given by a generating
// vector on a quotient of G together with the quotient map (element images);
// kernels are read off the maps, and their pairwise intersections must be
// trivial. When the action is free the Hodge diamond is returned.
std::pair<bool, HodgeDiamond> verify_unmixed(
    const GroupTable& G, const GeneratingVector& v1, const std::vector<Elt>& proj1,
    const GeneratingVector& v2, const std::vector<Elt>& proj2,
    const GeneratingVector& v3, const std::vector<Elt>& proj3);

// Step-1 style filters (necessary conditions on the candidate subgroup).
bool index2_step1_passes(const GroupTable& H, const BranchType& t2);
bool index3_step1_passes(const GroupTable& H, const BranchType& t1);
bool index6_step1_passes(const GroupTable& H, const BranchType& t1);

}  // namespace trifold
