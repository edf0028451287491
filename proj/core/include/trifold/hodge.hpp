#pragma once

#include <string>
#include <vector>

#include "trifold/characters.hpp"
#include "trifold/numdata.hpp"

namespace trifold {

struct HodgeDiamond {
  long long h30 = 0, h20 = 0, h10 = 0, h11 = 0, h12 = 0;

  long long chi() const { return 1 - h10 + h20 - h30; }
  // Euler number through the Betti numbers b0=b6=1, b1=b5=2h10,
  // b2=b4=2h20+h11, b3=2(h30+h12).
  long long euler_via_betti() const {
    return 2 - 4 * h10 + 2 * (2 * h20 + h11) - 2 * (h30 + h12);
  }
  std::string str() const;

  friend bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) {
    return a.h30 == b.h30 && a.h20 == b.h20 && a.h10 == b.h10 && a.h11 == b.h11 &&
           a.h12 == b.h12;
  }
  friend bool operator<(const HodgeDiamond& a, const HodgeDiamond& b) {
    auto ta = std::tie(a.h30, a.h20, a.h10, a.h11, a.h12);
    auto tb = std::tie(b.h30, b.h20, b.h10, b.h11, b.h12);
    return ta < tb;
  }
};

enum class PQ { pq10, pq11, pq20, pq21, pq30 };
inline constexpr PQ kAllPQ[] = {PQ::pq10, PQ::pq11, PQ::pq20, PQ::pq21, PQ::pq30};

// Kuenneth character combination on the diagonal subgroup, given the three
// curve characters as exact values at one element.
Cyclotomic kunneth_value(PQ pq, const Cyclotomic& v1, const Cyclotomic& v2,
                         const Cyclotomic& v3);

// Same combination lifted to class functions on a common group.
ClassFunction kunneth_restriction(const ClassFunction& c1, const ClassFunction& c2,
                                  const ClassFunction& c3, PQ pq);

// Trace-table values outside the diagonal subgroup. Reflection-type cosets
// (the delta coset in index two, G1 \ G0 in index six) take the character of
// the fixed curve at the element and of the swapped pair at its square;
// rotation-type cosets contribute only to (3,0) through the cube.
Cyclotomic outside_value_reflection(PQ pq, const Cyclotomic& chi1_at_elt,
                                    const Cyclotomic& chi2_at_square);
Cyclotomic outside_value_rotation(PQ pq, const Cyclotomic& chi1_at_cube);

// Hodge diamond of a mixed quotient. chi1 holds exact character values per
// element of G, defined on the domain of psi_1 (all of G in index two, the
// diagonal in index three, G1 in index six); chi2 likewise on the diagonal
// (index two only). The remaining curve characters follow from conjugation
// by the coset witnesses.
struct MixedHodgeInput {
  MixedCase mixed_case = MixedCase::index2;
  const GroupTable* G = nullptr;
  std::vector<char> in_diagonal;      // membership of G0
  Elt witness = -1;                   // delta (index two) or tau (index three/six)
  Elt h_elt = -1;                     // index six transposition-type witness
  std::vector<Cyclotomic> chi1;
  std::vector<Cyclotomic> chi2;       // index two only
};

HodgeDiamond hodge_diamond_mixed(const MixedHodgeInput& in);

// Unmixed quotient: all three characters live on G itself.
HodgeDiamond hodge_diamond_unmixed(const GroupTable& G,
                                   const std::vector<Cyclotomic>& chi1,
                                   const std::vector<Cyclotomic>& chi2,
                                   const std::vector<Cyclotomic>& chi3);

}  // namespace trifold
