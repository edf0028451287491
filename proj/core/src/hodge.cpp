#include "trifold/hodge.hpp"

#include "trifold/error.hpp"

namespace trifold {

std::string HodgeDiamond::str() const {
  return "(" + std::to_string(h30) + "," + std::to_string(h20) + "," +
         std::to_string(h10) + "," + std::to_string(h11) + "," +
         std::to_string(h12) + ")";
}

Cyclotomic kunneth_value(PQ pq, const Cyclotomic& v1, const Cyclotomic& v2,
                         const Cyclotomic& v3) {
  switch (pq) {
    case PQ::pq10:
      return v1 + v2 + v3;
    case PQ::pq11:
      return Cyclotomic(2) * (v1 * v2.conjugate() + v1 * v3.conjugate() +
                              v2 * v3.conjugate())
                 .real_part() +
             Cyclotomic(3);
    case PQ::pq20:
      return v1 * v2 + v1 * v3 + v2 * v3;
    case PQ::pq21:
      return v1.conjugate() * v2 * v3 + v1 * v2.conjugate() * v3 +
             v1 * v2 * v3.conjugate() + Cyclotomic(2) * (v1 + v2 + v3);
    case PQ::pq30:
      return v1 * v2 * v3;
  }
  throw Error("unreachable");
}

ClassFunction kunneth_restriction(const ClassFunction& c1, const ClassFunction& c2,
                                  const ClassFunction& c3, PQ pq) {
  if (c1.group() != c2.group() || c1.group() != c3.group())
    throw GroupMismatch("characters live on different groups");
  const auto& G = *c1.group();
  std::vector<Cyclotomic> vals(G.num_classes());
  for (int c = 0; c < G.num_classes(); ++c)
    vals[c] = kunneth_value(pq, c1.at_class(c), c2.at_class(c), c3.at_class(c));
  return ClassFunction(c1.group(), std::move(vals));
}

Cyclotomic outside_value_reflection(PQ pq, const Cyclotomic& chi1_at_elt,
                                    const Cyclotomic& chi2_at_square) {
  switch (pq) {
    case PQ::pq10: return chi1_at_elt;
    case PQ::pq11: return Cyclotomic(1);
    case PQ::pq20: return -chi2_at_square;
    case PQ::pq21: return -(chi1_at_elt.conjugate() * chi2_at_square);
    case PQ::pq30: return -(chi1_at_elt * chi2_at_square);
  }
  throw Error("unreachable");
}

Cyclotomic outside_value_rotation(PQ pq, const Cyclotomic& chi1_at_cube) {
  if (pq == PQ::pq30) return chi1_at_cube;
  return Cyclotomic(0);
}

namespace {

long long integral_average(const Cyclotomic& total, long long order) {
  Cyclotomic avg = total / Cyclotomic(order);
  if (!avg.is_rational())
    throw NonIntegralAverage("character average has a non-vanishing imaginary part");
  Rational r = avg.rational_value();
  if (!r.is_integer() || r < Rational(0))
    throw NonIntegralAverage("character average is not a non-negative integer");
  return r.num();
}

HodgeDiamond from_sums(const Cyclotomic sums[5], long long order) {
  HodgeDiamond d;
  d.h10 = integral_average(sums[0], order);
  d.h11 = integral_average(sums[1], order);
  d.h20 = integral_average(sums[2], order);
  d.h12 = integral_average(sums[3], order);
  d.h30 = integral_average(sums[4], order);
  return d;
}

}  // namespace

HodgeDiamond hodge_diamond_mixed(const MixedHodgeInput& in) {
  const auto& G = *in.G;
  const Elt w = in.witness;
  if (w < 0 || in.in_diagonal[w])
    throw ElementInDiagonal("coset witness lies in the diagonal subgroup");

  // chi_2, chi_3 from chi_1 (and chi_2 in index two) by conjugation.
  auto chi2_at = [&](Elt g) -> Cyclotomic {
    if (in.mixed_case == MixedCase::index2) return in.chi2[g];
    return in.chi1[G.conj(w, g)];
  };
  auto chi3_at = [&](Elt g) -> Cyclotomic {
    if (in.mixed_case == MixedCase::index2) return in.chi2[G.conj(w, g)];
    return in.chi1[G.conj(G.mul(w, w), g)];
  };

  Cyclotomic sums[5];
  for (Elt g = 0; g < G.order(); ++g) {
    if (!in.in_diagonal[g]) continue;
    const Cyclotomic v1 = in.chi1[g];
    const Cyclotomic v2 = chi2_at(g);
    const Cyclotomic v3 = chi3_at(g);
    for (int i = 0; i < 5; ++i)
      sums[i] += kunneth_value(kAllPQ[i], v1, v2, v3);
  }

  if (in.mixed_case == MixedCase::index2) {
    for (Elt g = 0; g < G.order(); ++g) {
      if (!in.in_diagonal[g]) continue;
      const Elt e = G.mul(w, g);
      const Elt sq = G.mul(e, e);
      for (int i = 0; i < 5; ++i)
        sums[i] += outside_value_reflection(kAllPQ[i], in.chi1[e], in.chi2[sq]);
    }
  } else {
    // rotation cosets tau G0 and tau^2 G0
    const Elt w2 = G.mul(w, w);
    for (Elt g = 0; g < G.order(); ++g) {
      if (!in.in_diagonal[g]) continue;
      for (Elt t : {G.mul(w, g), G.mul(w2, g)}) {
        const Elt cube = G.mul(G.mul(t, t), t);
        for (int i = 0; i < 5; ++i)
          sums[i] += outside_value_rotation(kAllPQ[i], in.chi1[cube]);
      }
    }
    if (in.mixed_case == MixedCase::index6) {
      // three transposition-type cosets; chi_{p,q} is a class function on G,
      // so each contributes the same sum as G1 \ G0 = h G0.
      for (Elt g = 0; g < G.order(); ++g) {
        if (!in.in_diagonal[g]) continue;
        const Elt f = G.mul(in.h_elt, g);
        const Elt f2 = G.mul(f, f);
        const Cyclotomic chi2_f2 = in.chi1[G.conj(w, f2)];
        for (int i = 0; i < 5; ++i)
          sums[i] += Cyclotomic(3) *
                     outside_value_reflection(kAllPQ[i], in.chi1[f], chi2_f2);
      }
    }
  }
  return from_sums(sums, G.order());
}

HodgeDiamond hodge_diamond_unmixed(const GroupTable& G,
                                   const std::vector<Cyclotomic>& chi1,
                                   const std::vector<Cyclotomic>& chi2,
                                   const std::vector<Cyclotomic>& chi3) {
  Cyclotomic sums[5];
  for (Elt g = 0; g < G.order(); ++g)
    for (int i = 0; i < 5; ++i)
      sums[i] += kunneth_value(kAllPQ[i], chi1[g], chi2[g], chi3[g]);
  return from_sums(sums, G.order());
}

}  // namespace trifold
