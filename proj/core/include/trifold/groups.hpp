#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trifold/error.hpp"

namespace trifold {

using Elt = int;

// Dense bitset over the element indices of one group.
class ElementSet {
 public:
  ElementSet() : size_(0) {}
  explicit ElementSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int universe_size() const { return size_; }

  void insert(Elt x) { words_[x >> 6] |= (uint64_t{1} << (x & 63)); }
  void erase(Elt x) { words_[x >> 6] &= ~(uint64_t{1} << (x & 63)); }
  bool contains(Elt x) const { return (words_[x >> 6] >> (x & 63)) & 1; }

  int count() const;
  bool empty() const;

  ElementSet& operator&=(const ElementSet& o);
  ElementSet& operator|=(const ElementSet& o);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  // True iff the set is exactly {0}, i.e. only the identity.
  bool is_identity_only() const;

  std::vector<Elt> to_vector() const;

 private:
  int size_;
  std::vector<uint64_t> words_;
};

// A finite group materialized as a full multiplication table.
// Element 0 is the identity; the element ordering is the deterministic
// BFS closure order produced by from_permutation_generators.
class GroupTable {
 public:
  GroupTable() = default;

  int order() const { return order_; }
  static constexpr Elt id = 0;

  Elt mul(Elt a, Elt b) const { return mult_[static_cast<size_t>(a) * order_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
  Elt pow(Elt a, long long k) const;
  Elt commutator(Elt a, Elt b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  int element_order(Elt a) const { return elt_order_[a]; }
  const std::vector<Elt>& generators() const { return gens_; }
  int exponent() const { return exponent_; }

  // Conjugacy classes sorted by (element order, class size, smallest member).
  const std::vector<std::vector<Elt>>& conjugacy_classes() const { return classes_; }
  int class_of(Elt x) const { return class_of_[x]; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  Elt class_rep(int c) const { return classes_[c].front(); }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  // class index of {x^k : x in class c}
  int class_power(int c, long long k) const;
  int class_of_inverses(int c) const { return class_power(c, -1); }
  int centralizer_order(Elt x) const { return order_ / class_size(class_of(x)); }

  bool is_abelian() const;
  std::vector<Elt> center() const;

  // Closure of a set of elements, ascending element order.
  std::vector<Elt> closure(const std::vector<Elt>& seed) const;
  bool generates(const std::vector<Elt>& seed) const;

  // Per-element invariant used to prune isomorphism search:
  // (element order, conjugacy class size).
  std::pair<int, int> element_fingerprint(Elt x) const {
    return {elt_order_[x], class_size(class_of(x))};
  }

  // Used by from_permutation_generators / named constructions.
  static GroupTable from_mult_table(int order, std::vector<Elt> mult,
                                    std::vector<Elt> gens);

 private:
  void finalize();

  int order_ = 0;
  std::vector<Elt> mult_;
  std::vector<Elt> inv_;
  std::vector<int> elt_order_;
  std::vector<Elt> gens_;
  int exponent_ = 1;
  std::vector<std::vector<Elt>> classes_;
  std::vector<int> class_of_;
};

struct Subgroup {
  const GroupTable* parent = nullptr;
  std::vector<Elt> members;  // sorted ascending, members[0] == 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Elt x) const;
  int index() const { return parent->order() / order(); }
  ElementSet to_set() const;

  // Materializes the subgroup as its own GroupTable. embedding[i] is the
  // parent index of subgroup element i; the subgroup ordering is BFS over
  // the generators found for it, so identity lands at 0.
  std::pair<GroupTable, std::vector<Elt>> to_group() const;

  bool is_normal() const;
};

struct GroupHom {
  const GroupTable* source = nullptr;
  const GroupTable* target = nullptr;
  std::vector<Elt> images;  // per source element

  Elt operator()(Elt x) const { return images[x]; }
  bool verify() const;  // images[xy] == images[x]*images[y] for all x,y
  bool is_bijective() const;
  std::vector<Elt> kernel() const;
};

inline constexpr int kDefaultOrderCap = 4096;

// Closure of permutation generators on {0..k-1}, re-indexed with identity
// at 0 in BFS order over the sorted generator list.
GroupTable from_permutation_generators(const std::vector<std::vector<int>>& gens,
                                       int cap = kDefaultOrderCap);

Subgroup centralizer(const GroupTable& G, Elt x);
Subgroup subgroup_generated_by(const GroupTable& G, const std::vector<Elt>& seed);

// All normal subgroups of exact index k (k in {2,3,6}), deterministic order.
std::vector<Subgroup> normal_subgroups_of_index(const GroupTable& G, int k);

// Coset table plus projection images (coset index per element of G);
// identity coset at index 0. Bind a GroupHom once the quotient group has a
// stable address.
std::pair<GroupTable, std::vector<Elt>> quotient(const GroupTable& G, const Subgroup& N);

// True iff a complement of N in G exists. Pre: N normal, [G:N] in {2,3,6}.
bool is_split_extension(const GroupTable& G, const Subgroup& N);

std::optional<GroupHom> isomorphism(const GroupTable& G, const GroupTable& H);

// Kernels of epimorphisms G -> Q for small Q, deduplicated, sorted by
// member list. Used for index-2/3/6 normal subgroup enumeration.
std::vector<Subgroup> kernels_of_epimorphisms(const GroupTable& G, const GroupTable& Q);

}  // namespace trifold
