#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trifold/characters.hpp"
#include "trifold/groups.hpp"
#include "trifold/rational.hpp"

namespace trifold {

// Branching type [g'; m_1,...,m_r]: quotient genus plus sorted branching
// orders. Canonical text form matches the classification tables, e.g.
// "[0;2^2,4^2]" or "[2;-]".
struct BranchType {
  int g_prime = 0;
  std::vector<int> orders;  // ascending, each >= 2

  int r() const { return static_cast<int>(orders.size()); }
  void canonicalize();

  std::string str() const;
  static BranchType parse(const std::string& text);

  friend bool operator==(const BranchType& a, const BranchType& b) {
    return a.g_prime == b.g_prime && a.orders == b.orders;
  }
  friend bool operator<(const BranchType& a, const BranchType& b) {
    if (a.g_prime != b.g_prime) return a.g_prime < b.g_prime;
    return a.orders < b.orders;
  }
};

// Genus of the covering curve via the ramified Hurwitz formula,
// g = (|H|/2k)(2g'-2 + sum (m-1)/m) + 1; nullopt when not an integer.
std::optional<long long> hurwitz_genus(long long group_order, long long kernel_order,
                                       const BranchType& type);

struct GeneratingVector {
  const GroupTable* group = nullptr;
  BranchType type;
  std::vector<Elt> elliptic;    // r entries, ord(elliptic[j]) == orders[j]
  std::vector<Elt> hyperbolic;  // 2 g' entries a1,b1,...

  std::vector<Elt> entries() const;
  // long relation h_1...h_r [a_1,b_1]...[a_g',b_g'] evaluates to identity
  bool long_relation_holds() const;
  bool is_valid() const;  // orders, relation, generation
};

// Emits every generating vector of the given type in deterministic order;
// the sink returns false to stop early.
using VectorSink = std::function<bool(const GeneratingVector&)>;
void enumerate_generating_vectors(const GroupTable& H, const BranchType& type,
                                  const VectorSink& sink);
std::vector<GeneratingVector> all_generating_vectors(const GroupTable& H,
                                                     const BranchType& type);
long long count_generating_vectors(const GroupTable& H, const BranchType& type);
bool exists_generating_vector(const GroupTable& H, const BranchType& type);

// Union of all conjugates of all powers of the elliptic generators,
// including the identity.
ElementSet stabilizer_set(const GeneratingVector& V);

// Pre-image of a stabilizer set under a quotient map given elementwise;
// quotient_images[x] is the image of source element x in the stabilizer
// set's group.
ElementSet preimage_stabilizer(const GroupTable& source,
                               const std::vector<Elt>& quotient_images,
                               const ElementSet& sigma_bar);

// Number of fixed points of h on the covering curve; h != identity.
long long fixed_point_count(const GeneratingVector& V, Elt h);

// Character of the group on the holomorphic 1-forms of the covering curve,
// in Eichler trace form.
ClassFunction chevalley_weil(const GeneratingVector& V);

// Same character assembled from irreducible multiplicities; exact agreement
// with chevalley_weil is a structural invariant.
ClassFunction chevalley_weil_from_table(const GeneratingVector& V,
                                        const CharacterTable& table);

}  // namespace trifold
