#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trifold/pipeline.hpp"

namespace trifold {

// Parsed algebraic-datum file: a group block in the catalog format followed
// by vector/kernel/coset lines. Vector entries are lifts in G; the actual
// generating vectors live on the quotients by the declared kernels.
struct DatumFile {
  enum class Kind { index2, index3, index6, unmixed };

  struct VectorSpec {
    int which = 0;  // 1, 2 or 3
    BranchType type;
    std::vector<Elt> lifts;
  };

  Kind kind = Kind::unmixed;
  std::string group_name;
  GroupTable G;
  std::vector<VectorSpec> vectors;
  std::vector<std::vector<Elt>> kernels;  // per slot 1..3, identity-only default
  std::optional<Elt> tau;
  std::optional<Elt> h;
};

DatumFile parse_datum_file(const std::string& path);

struct DatumVerification {
  bool free = false;
  HodgeDiamond diamond;  // meaningful only when free
  ChernTriple chern;
  std::vector<long long> genera;  // curve genera g1, g2, g3
};

// Re-checks the shape conditions of the declared case, the freeness
// conditions, and (when free) computes the Hodge diamond.
DatumVerification verify_datum(const DatumFile& file);

}  // namespace trifold
