#pragma once

#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trifold/groups.hpp"

namespace trifold {

enum class Family {
  cyclic,            // param n >= 1
  dihedral,          // param n >= 1, order 2n
  dicyclic,          // param = order 4n >= 8
  semidihedral,      // param = order 2^n >= 16
  m16,               // no param
  quaternion,        // no param (= dicyclic 8)
  symmetric,         // param k <= 4
  alternating,       // param k <= 4
  holomorph_cyclic,  // param n: Z_n : Aut(Z_n)
  gl2_3,             // GL(2, F_3)
  sl2_3,             // SL(2, F_3)
  binary_octahedral  // order 48
};

GroupTable make_named(Family family, int param = 0);

GroupTable direct_product(const GroupTable& G, const GroupTable& H);

// action[h] is the automorphism of N induced by h in H, as an element map.
// Verified: each map is an automorphism and h -> action[h] is a homomorphism.
GroupTable semidirect_product(const GroupTable& N, const GroupTable& H,
                              const std::vector<std::vector<Elt>>& action);

// Extends images of H's recorded generators to a full action table.
std::vector<std::vector<Elt>> action_from_generator_images(
    const GroupTable& N, const GroupTable& H,
    const std::vector<std::vector<Elt>>& gen_images);

// phi is an isomorphism between central subgroups, given on every element
// of its domain as (u, phi(u)) pairs.
GroupTable central_product(const GroupTable& G1, const GroupTable& G2,
                           const std::vector<std::pair<Elt, Elt>>& phi);

struct CatalogEntry {
  std::string name;
  long long order = 0;
  GroupTable group;
  std::optional<std::pair<long long, long long>> external_id;

  std::string id_str() const;  // "a,b" or "-"
};

// Group catalog: complete built-in listings for orders 1..16 and 27, the
// named groups used by the classification tables, and file import for
// anything larger.
class Catalog {
 public:
  Catalog() = default;
  static Catalog with_builtins();

  bool is_complete(long long order) const { return complete_.count(order) > 0; }
  const std::deque<CatalogEntry>& all() const { return entries_; }
  std::vector<const CatalogEntry*> of_order(long long n) const;

  // One entry per isomorphism class; throws IncompleteOrder when the
  // catalog cannot guarantee completeness for n.
  std::vector<const CatalogEntry*> complete_catalog(long long n) const;

  // Returns the number of new (non-duplicate) groups added. Orders that
  // appear in the file are marked complete; files are expected to list a
  // full isomorphism-class census for each order they cover.
  size_t import_file(const std::string& path,
                     std::vector<std::string>* warnings = nullptr);
  void export_file(const std::vector<long long>& orders,
                   const std::string& path) const;

  const CatalogEntry* identify(const GroupTable& G) const;

  // Adds an entry; deduplicates isomorphic groups of the same order
  // (merging external ids) and disambiguates name collisions with #k.
  // Returns the stored entry, or the existing duplicate.
  const CatalogEntry* add(std::string name, GroupTable group,
                          std::optional<std::pair<long long, long long>> id,
                          std::vector<std::string>* warnings = nullptr);

  void mark_complete(long long order) { complete_.insert(order); }

 private:
  std::deque<CatalogEntry> entries_;  // stable addresses
  std::set<long long> complete_;
};

}  // namespace trifold
