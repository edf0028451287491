#pragma once

#include <vector>

#include "trifold/cyclotomic.hpp"
#include "trifold/groups.hpp"

namespace trifold {

// Exact complex-valued class function, one value per conjugacy class.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(const GroupTable* g, std::vector<Cyclotomic> values)
      : group_(g), values_(std::move(values)) {}

  static ClassFunction constant(const GroupTable& g, Cyclotomic v);

  const GroupTable* group() const { return group_; }
  const std::vector<Cyclotomic>& class_values() const { return values_; }
  const Cyclotomic& at_class(int c) const { return values_[c]; }
  const Cyclotomic& at(Elt x) const { return values_[group_->class_of(x)]; }
  const Cyclotomic& degree() const { return values_[0]; }

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  ClassFunction operator*(const Cyclotomic& s) const;
  ClassFunction conjugate() const;
  ClassFunction real_part() const;

  // g -> value(perm[g]) for an automorphism given elementwise; used to
  // translate a character along conjugation by an ambient element.
  ClassFunction translated(const std::vector<Elt>& perm) const;

  // Restriction to a materialized subgroup (sub, embedding into group()).
  ClassFunction restricted(const GroupTable& sub,
                           const std::vector<Elt>& embedding) const;

  Rational inner_product(const ClassFunction& other) const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  const GroupTable* group_ = nullptr;
  std::vector<Cyclotomic> values_;
};

struct CharacterTable {
  const GroupTable* group = nullptr;
  std::vector<ClassFunction> irreducibles;  // trivial first, then by degree
  std::vector<long long> degrees;
};

inline constexpr int kCharacterTableCap = 2048;

// Complete irreducible character table with exact cyclotomic values,
// computed with the modular (Dixon) method and lifted to conductor
// exponent(G). Deterministic ordering: trivial character first, remaining
// characters by (degree, lexicographic values).
CharacterTable character_table(const GroupTable& G, int cap = kCharacterTableCap);

ClassFunction trivial_character(const GroupTable& G);
ClassFunction regular_character(const GroupTable& G);

}  // namespace trifold
