#include "trifold/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "trifold/error.hpp"

namespace trifold {

namespace {

ElementSet conj_set(const GroupTable& G, Elt g, const ElementSet& s) {
  ElementSet out(G.order());
  for (Elt x = 0; x < G.order(); ++x)
    if (s.contains(x)) out.insert(G.conj(g, x));
  return out;
}

}  // namespace

bool free_index2(const GroupTable& G, const Subgroup& G0, const ElementSet& sigma1,
                 const ElementSet& sigma2, Elt delta) {
  if (G0.contains(delta)) throw BadCoset("delta lies in the diagonal subgroup");
  ElementSet meet = sigma1;
  meet &= sigma2;
  meet &= conj_set(G, delta, sigma2);
  if (!meet.is_identity_only()) return false;
  for (Elt g : G0.members) {
    Elt e = G.mul(delta, g);
    if (!sigma1.contains(e)) continue;
    if (sigma2.contains(G.mul(e, e))) return false;
  }
  return true;
}

bool free_index3(const GroupTable& G, const Subgroup& G0, const ElementSet& sigma1,
                 Elt tau) {
  if (G0.contains(tau)) throw BadCoset("tau lies in the diagonal subgroup");
  ElementSet meet = sigma1;
  meet &= conj_set(G, tau, sigma1);
  meet &= conj_set(G, G.mul(tau, tau), sigma1);
  return meet.is_identity_only();
}

bool free_index6(const GroupTable& G, const Subgroup& G0, const Subgroup& G1,
                 const ElementSet& sigma1, Elt tau, Elt h) {
  if (G0.contains(tau) || G0.contains(G.mul(tau, tau)))
    throw BadCoset("tau must map to a three-cycle");
  if (G0.contains(h) || !G0.contains(G.mul(h, h)))
    throw BadShape("h must map to a transposition");
  if (G1.order() != 2 * G0.order())
    throw BadShape("G1 must be generated by h over the diagonal");

  ElementSet meet = sigma1;
  meet &= conj_set(G, tau, sigma1);
  meet &= conj_set(G, G.mul(tau, tau), sigma1);
  if (!meet.is_identity_only()) return false;

  for (Elt g : G0.members) {
    Elt t = G.mul(tau, g);
    if (sigma1.contains(G.mul(G.mul(t, t), t))) return false;
  }
  for (Elt f : G1.members) {
    if (G0.contains(f) || !sigma1.contains(f)) continue;
    if (sigma1.contains(G.conj(tau, G.mul(f, f)))) return false;
  }
  return true;
}

// ------------------------------------------------------------ Step-1 filters

bool index2_step1_passes(const GroupTable& H, const BranchType& t2) {
  return exists_generating_vector(H, t2);
}

bool index3_step1_passes(const GroupTable& H, const BranchType& t1) {
  // three generating vectors whose stabilizer sets intersect trivially
  std::vector<ElementSet> sigmas;
  enumerate_generating_vectors(H, t1, [&](const GeneratingVector& v) {
    auto s = stabilizer_set(v);
    for (const auto& other : sigmas)
      if (other == s) return true;
    sigmas.push_back(std::move(s));
    return true;
  });
  const size_t k = sigmas.size();
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a; b < k; ++b) {
      ElementSet ab = sigmas[a];
      ab &= sigmas[b];
      if (ab.is_identity_only()) return true;  // third vector can repeat one
      for (size_t c = b; c < k; ++c) {
        ElementSet abc = ab;
        abc &= sigmas[c];
        if (abc.is_identity_only()) return true;
      }
    }
  return false;
}

bool index6_step1_passes(const GroupTable& H, const BranchType& t1) {
  return exists_generating_vector(H, t1);
}

// ----------------------------------------------------------------- classify

bool operator<(const ClassifiedRow& a, const ClassifiedRow& b) {
  auto key = [](const ClassifiedRow& r) {
    return std::make_tuple(r.order, r.group_name, r.t1.str(),
                           r.t2 ? r.t2->str() : std::string("-"),
                           r.diamond, r.d);
  };
  return key(a) < key(b);
}

namespace {

// Vectors of one type grouped by (stabilizer set, character); freeness and
// the diamond depend on a vector only through these.
struct VectorBucket {
  ElementSet sigma;                // in ambient group indices
  std::vector<Cyclotomic> chi;     // per ambient group element, on the domain
  long long count = 0;
};

using BucketKey = std::pair<std::vector<Elt>, std::string>;

std::vector<VectorBucket> bucket_vectors(const GroupTable& ambient,
                                         const GroupTable& acting,
                                         const std::vector<Elt>* embedding,
                                         const BranchType& type) {
  std::map<BucketKey, size_t> index;
  std::vector<VectorBucket> buckets;
  enumerate_generating_vectors(acting, type, [&](const GeneratingVector& v) {
    auto sigma_small = stabilizer_set(v);
    auto chi = chevalley_weil(v);
    BucketKey key{sigma_small.to_vector(), {}};
    for (const auto& c : chi.class_values()) key.second += c.str() + "|";
    auto it = index.find(key);
    if (it != index.end()) {
      ++buckets[it->second].count;
      return true;
    }
    VectorBucket b;
    b.sigma = ElementSet(ambient.order());
    b.chi.assign(ambient.order(), Cyclotomic(0));
    for (Elt x = 0; x < acting.order(); ++x) {
      Elt big = embedding ? (*embedding)[x] : x;
      if (sigma_small.contains(x)) b.sigma.insert(big);
      b.chi[big] = chi.at(x);
    }
    b.count = 1;
    index.emplace(std::move(key), buckets.size());
    buckets.push_back(std::move(b));
    return true;
  });
  return buckets;
}

struct RowSink {
  std::mutex mu;
  std::map<std::tuple<std::string, std::string, std::string, HodgeDiamond, long long>,
           ClassifiedRow>
      rows;

  void emit(ClassifiedRow row) {
    auto key = std::make_tuple(row.group_name, row.t1.str(),
                               row.t2 ? row.t2->str() : std::string("-"),
                               row.diamond, row.d);
    std::lock_guard<std::mutex> lock(mu);
    auto it = rows.find(key);
    if (it == rows.end())
      rows.emplace(std::move(key), std::move(row));
    else
      it->second.witnesses += row.witnesses;
  }
};

void verify_row(const ClassifiedRow& row, long long chi) {
  if (row.diamond.chi() != chi)
    throw Error("classified row fails the chi consistency check");
  if (row.diamond.euler_via_betti() != 8 * chi)
    throw Error("classified row fails the Euler number cross-check");
}

void classify_index2_group(const CatalogEntry& entry,
                           const std::vector<NumericalDatum>& data, long long chi,
                           RowSink& sink) {
  const GroupTable& G = entry.group;
  auto g0s = normal_subgroups_of_index(G, 2);
  if (g0s.empty()) return;

  std::map<std::string, std::vector<VectorBucket>> v1_cache;
  for (const auto& G0 : g0s) {
    auto [H0, embed] = G0.to_group();
    Elt delta = -1;
    for (Elt x = 0; x < G.order() && delta < 0; ++x)
      if (!G0.contains(x)) delta = x;
    std::vector<char> in_diag(G.order(), 0);
    for (Elt m : G0.members) in_diag[m] = 1;

    std::map<std::string, std::vector<VectorBucket>> v2_cache;
    for (const auto& datum : data) {
      if (!index2_step1_passes(H0, *datum.t2)) continue;
      auto t1_key = datum.t1.str();
      if (!v1_cache.count(t1_key))
        v1_cache.emplace(t1_key, bucket_vectors(G, G, nullptr, datum.t1));
      const auto& v1bs = v1_cache[t1_key];
      if (v1bs.empty()) continue;
      auto t2_key = datum.t2->str();
      if (!v2_cache.count(t2_key))
        v2_cache.emplace(t2_key, bucket_vectors(G, H0, &embed, *datum.t2));
      const auto& v2bs = v2_cache[t2_key];

      for (const auto& b1 : v1bs)
        for (const auto& b2 : v2bs) {
          if (!free_index2(G, G0, b1.sigma, b2.sigma, delta)) continue;
          MixedHodgeInput in;
          in.mixed_case = MixedCase::index2;
          in.G = &G;
          in.in_diagonal = in_diag;
          in.witness = delta;
          in.chi1 = b1.chi;
          in.chi2 = b2.chi;
          ClassifiedRow row;
          row.mixed_case = MixedCase::index2;
          row.group_name = entry.name;
          row.external_id = entry.id_str();
          row.order = G.order();
          row.t1 = datum.t1;
          row.t2 = datum.t2;
          row.diamond = hodge_diamond_mixed(in);
          row.d = param_count(MixedCase::index2, datum.t1, &*datum.t2);
          row.witnesses = b1.count * b2.count;
          verify_row(row, chi);
          sink.emit(std::move(row));
        }
    }
  }
}

void classify_index3_group(const CatalogEntry& entry,
                           const std::vector<NumericalDatum>& data, long long chi,
                           RowSink& sink) {
  const GroupTable& G = entry.group;
  for (const auto& G0 : normal_subgroups_of_index(G, 3)) {
    if (is_split_extension(G, G0)) continue;
    auto [H0, embed] = G0.to_group();
    Elt tau = -1;
    for (Elt x = 0; x < G.order() && tau < 0; ++x)
      if (!G0.contains(x)) tau = x;
    std::vector<char> in_diag(G.order(), 0);
    for (Elt m : G0.members) in_diag[m] = 1;

    for (const auto& datum : data) {
      if (!index3_step1_passes(H0, datum.t1)) continue;
      for (const auto& b : bucket_vectors(G, H0, &embed, datum.t1)) {
        if (!free_index3(G, G0, b.sigma, tau)) continue;
        MixedHodgeInput in;
        in.mixed_case = MixedCase::index3;
        in.G = &G;
        in.in_diagonal = in_diag;
        in.witness = tau;
        in.chi1 = b.chi;
        ClassifiedRow row;
        row.mixed_case = MixedCase::index3;
        row.group_name = entry.name;
        row.external_id = entry.id_str();
        row.order = G.order();
        row.t1 = datum.t1;
        row.diamond = hodge_diamond_mixed(in);
        row.d = param_count(MixedCase::index3, datum.t1, nullptr);
        row.witnesses = b.count;
        verify_row(row, chi);
        sink.emit(std::move(row));
      }
    }
  }
}

void classify_index6_group(const CatalogEntry& entry,
                           const std::vector<NumericalDatum>& data, long long chi,
                           RowSink& sink) {
  const GroupTable& G = entry.group;
  for (const auto& G0 : normal_subgroups_of_index(G, 6)) {
    {
      auto [Q, images] = quotient(G, G0);
      (void)images;
      if (Q.is_abelian()) continue;  // quotient must be the symmetric group
    }
    if (is_split_extension(G, G0)) continue;
    Elt tau = -1, h = -1;
    for (Elt x = 0; x < G.order(); ++x) {
      if (G0.contains(x)) continue;
      bool sq_in = G0.contains(G.mul(x, x));
      if (!sq_in && tau < 0) tau = x;
      if (sq_in && h < 0) h = x;
    }
    if (tau < 0 || h < 0) continue;
    std::vector<Elt> g1_seed = G0.members;
    g1_seed.push_back(h);
    Subgroup G1 = subgroup_generated_by(G, g1_seed);
    auto [H1, embed] = G1.to_group();
    std::vector<char> in_diag(G.order(), 0);
    for (Elt m : G0.members) in_diag[m] = 1;

    for (const auto& datum : data) {
      if (!index6_step1_passes(H1, datum.t1)) continue;
      for (const auto& b : bucket_vectors(G, H1, &embed, datum.t1)) {
        if (!free_index6(G, G0, G1, b.sigma, tau, h)) continue;
        MixedHodgeInput in;
        in.mixed_case = MixedCase::index6;
        in.G = &G;
        in.in_diagonal = in_diag;
        in.witness = tau;
        in.h_elt = h;
        in.chi1 = b.chi;
        ClassifiedRow row;
        row.mixed_case = MixedCase::index6;
        row.group_name = entry.name;
        row.external_id = entry.id_str();
        row.order = G.order();
        row.t1 = datum.t1;
        row.diamond = hodge_diamond_mixed(in);
        row.d = param_count(MixedCase::index6, datum.t1, nullptr);
        row.witnesses = b.count;
        verify_row(row, chi);
        sink.emit(std::move(row));
      }
    }
  }
}

}  // namespace

ClassifyResult classify(long long chi, MixedCase mixed_case, long long min_order,
                        long long max_order, const Catalog& catalog,
                        const NmaxTable& nmax, int jobs) {
  auto all_data = admissible_numerical_data(chi, mixed_case, nmax);
  std::map<long long, std::vector<NumericalDatum>> by_order;
  for (auto& d : all_data) {
    if (d.n < min_order || d.n > max_order) continue;
    by_order[d.n].push_back(d);
  }

  ClassifyResult result;
  struct Unit {
    const CatalogEntry* entry;
    const std::vector<NumericalDatum>* data;
  };
  std::vector<Unit> units;

  for (const auto& [n, data] : by_order) {
    const long long sub_order = mixed_case == MixedCase::index2 ? n / 2 : n / 3;
    if (catalog.is_complete(n)) {
      for (const auto* entry : catalog.complete_catalog(n))
        units.push_back(Unit{entry, &data});
      continue;
    }
    if (catalog.is_complete(sub_order)) {
      // Step 1 alone can resolve the order when no candidate subgroup
      // admits the required vectors.
      bool survivor = false;
      for (const auto& datum : data) {
        for (const auto* h : catalog.complete_catalog(sub_order)) {
          bool pass = false;
          switch (mixed_case) {
            case MixedCase::index2: pass = index2_step1_passes(h->group, *datum.t2); break;
            case MixedCase::index3: pass = index3_step1_passes(h->group, datum.t1); break;
            case MixedCase::index6: pass = index6_step1_passes(h->group, datum.t1); break;
          }
          if (pass) { survivor = true; break; }
        }
        if (survivor) break;
      }
      if (survivor) result.unresolved_orders.push_back(n);
      continue;
    }
    result.unresolved_orders.push_back(n);
  }

  RowSink sink;
  const int workers = std::max(1, jobs);
  if (workers == 1 || units.size() <= 1) {
    for (const auto& u : units) {
      switch (mixed_case) {
        case MixedCase::index2: classify_index2_group(*u.entry, *u.data, chi, sink); break;
        case MixedCase::index3: classify_index3_group(*u.entry, *u.data, chi, sink); break;
        case MixedCase::index6: classify_index6_group(*u.entry, *u.data, chi, sink); break;
      }
    }
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= units.size()) return;
          switch (mixed_case) {
            case MixedCase::index2:
              classify_index2_group(*units[i].entry, *units[i].data, chi, sink);
              break;
            case MixedCase::index3:
              classify_index3_group(*units[i].entry, *units[i].data, chi, sink);
              break;
            case MixedCase::index6:
              classify_index6_group(*units[i].entry, *units[i].data, chi, sink);
              break;
          }
        }
      });
    for (auto& t : pool) t.join();
  }

  for (auto& [key, row] : sink.rows) result.rows.push_back(std::move(row));
  std::sort(result.rows.begin(), result.rows.end());
  std::sort(result.unresolved_orders.begin(), result.unresolved_orders.end());
  result.unresolved_orders.erase(
      std::unique(result.unresolved_orders.begin(), result.unresolved_orders.end()),
      result.unresolved_orders.end());
  return result;
}

std::pair<bool, HodgeDiamond> verify_unmixed(
    const GroupTable& G, const GeneratingVector& v1, const std::vector<Elt>& proj1,
    const GeneratingVector& v2, const std::vector<Elt>& proj2,
    const GeneratingVector& v3, const std::vector<Elt>& proj3) {
  const std::vector<Elt>* projs[3] = {&proj1, &proj2, &proj3};
  const GeneratingVector* vecs[3] = {&v1, &v2, &v3};

  // kernels and pairwise minimality
  std::vector<std::vector<char>> in_kernel(3, std::vector<char>(G.order(), 0));
  for (int i = 0; i < 3; ++i) {
    if (static_cast<int>(projs[i]->size()) != G.order())
      throw GroupMismatch("projection does not cover the group");
    for (Elt x = 0; x < G.order(); ++x)
      if ((*projs[i])[x] == GroupTable::id) in_kernel[i][x] = 1;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (Elt x = 1; x < G.order(); ++x)
        if (in_kernel[i][x] && in_kernel[j][x])
          throw NotMinimal("kernels intersect non-trivially");

  ElementSet meet(G.order());
  for (Elt x = 0; x < G.order(); ++x) meet.insert(x);
  for (int i = 0; i < 3; ++i)
    meet &= preimage_stabilizer(G, *projs[i], stabilizer_set(*vecs[i]));
  if (!meet.is_identity_only()) return {false, HodgeDiamond{}};

  std::vector<std::vector<Cyclotomic>> chis(3);
  for (int i = 0; i < 3; ++i) {
    auto chi = chevalley_weil(*vecs[i]);
    chis[i].resize(G.order());
    for (Elt x = 0; x < G.order(); ++x) chis[i][x] = chi.at((*projs[i])[x]);
  }
  return {true, hodge_diamond_unmixed(G, chis[0], chis[1], chis[2])};
}

}  // namespace trifold
