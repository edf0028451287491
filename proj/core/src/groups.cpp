#include "trifold/groups.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace trifold {

// ---------------------------------------------------------------- ElementSet

int ElementSet::count() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool ElementSet::empty() const {
  for (uint64_t w : words_) if (w) return false;
  return true;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

bool ElementSet::is_identity_only() const {
  if (words_.empty() || words_[0] != 1) return false;
  for (size_t i = 1; i < words_.size(); ++i) if (words_[i]) return false;
  return true;
}

std::vector<Elt> ElementSet::to_vector() const {
  std::vector<Elt> out;
  for (int x = 0; x < size_; ++x) if (contains(x)) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------- GroupTable

Elt GroupTable::pow(Elt a, long long k) const {
  int m = elt_order_[a];
  long long r = k % m;
  if (r < 0) r += m;
  Elt acc = id;
  for (long long i = 0; i < r; ++i) acc = mul(acc, a);
  return acc;
}

int GroupTable::class_power(int c, long long k) const {
  return class_of_[pow(classes_[c].front(), k)];
}

bool GroupTable::is_abelian() const {
  return static_cast<int>(classes_.size()) == order_;
}

std::vector<Elt> GroupTable::center() const {
  std::vector<Elt> z;
  for (Elt x = 0; x < order_; ++x)
    if (class_size(class_of_[x]) == 1) z.push_back(x);
  return z;
}

std::vector<Elt> GroupTable::closure(const std::vector<Elt>& seed) const {
  std::vector<char> in(order_, 0);
  std::vector<Elt> frontier{id}, all{id};
  in[id] = 1;
  for (Elt s : seed)
    if (!in[s]) { in[s] = 1; frontier.push_back(s); all.push_back(s); }
  while (!frontier.empty()) {
    std::vector<Elt> next;
    for (Elt x : frontier)
      for (Elt s : seed) {
        Elt y = mul(x, s);
        if (!in[y]) { in[y] = 1; next.push_back(y); all.push_back(y); }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool GroupTable::generates(const std::vector<Elt>& seed) const {
  return static_cast<int>(closure(seed).size()) == order_;
}

GroupTable GroupTable::from_mult_table(int order, std::vector<Elt> mult,
                                       std::vector<Elt> gens) {
  GroupTable G;
  G.order_ = order;
  G.mult_ = std::move(mult);
  G.gens_ = std::move(gens);
  G.finalize();
  return G;
}

void GroupTable::finalize() {
  const int n = order_;
  for (Elt x = 0; x < n; ++x) {
    if (mul(id, x) != x || mul(x, id) != x)
      throw AxiomViolation("identity is not at index 0");
  }
  // Associativity: exhaustive up to order 64, sampled above.
  if (n <= 64) {
    for (Elt a = 0; a < n; ++a)
      for (Elt b = 0; b < n; ++b)
        for (Elt c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw AxiomViolation("multiplication table is not associative");
  } else {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    for (int t = 0; t < 20000; ++t) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      Elt a = static_cast<Elt>((s >> 33) % n);
      Elt b = static_cast<Elt>((s >> 13) % n);
      Elt c = static_cast<Elt>(s % n);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw AxiomViolation("multiplication table is not associative");
    }
  }

  inv_.assign(n, -1);
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y)
      if (mul(x, y) == id && mul(y, x) == id) { inv_[x] = y; break; }
    if (inv_[x] < 0) throw AxiomViolation("element without two-sided inverse");
  }

  elt_order_.assign(n, 0);
  exponent_ = 1;
  for (Elt x = 0; x < n; ++x) {
    int m = 1;
    Elt acc = x;
    while (acc != id) { acc = mul(acc, x); ++m; }
    elt_order_[x] = m;
    exponent_ = static_cast<int>(std::lcm(exponent_, m));
  }

  // Conjugacy classes.
  class_of_.assign(n, -1);
  std::vector<std::vector<Elt>> raw;
  for (Elt x = 0; x < n; ++x) {
    if (class_of_[x] >= 0) continue;
    std::vector<Elt> cls;
    std::vector<char> seen(n, 0);
    for (Elt g = 0; g < n; ++g) {
      Elt y = mul(mul(g, x), inv_[g]);
      if (!seen[y]) { seen[y] = 1; cls.push_back(y); }
    }
    std::sort(cls.begin(), cls.end());
    for (Elt y : cls) class_of_[y] = static_cast<int>(raw.size());
    raw.push_back(std::move(cls));
  }
  std::sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
    int oa = elt_order_[a.front()], ob = elt_order_[b.front()];
    if (oa != ob) return oa < ob;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  classes_ = std::move(raw);
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    for (Elt y : classes_[c]) class_of_[y] = c;

  if (gens_.empty() && n > 1) {
    // Fall back to a greedy generating set.
    std::vector<Elt> g;
    std::vector<Elt> cl{id};
    for (Elt x = 1; x < n; ++x) {
      if (std::binary_search(cl.begin(), cl.end(), x)) continue;
      g.push_back(x);
      cl = closure(g);
      if (static_cast<int>(cl.size()) == n) break;
    }
    gens_ = std::move(g);
  }
}

// ------------------------------------------------- permutation construction

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a*b)(x) = a(b(x))
  std::vector<int> r(a.size());
  for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

}  // namespace

GroupTable from_permutation_generators(const std::vector<std::vector<int>>& gens_in,
                                       int cap) {
  if (gens_in.empty()) throw InvalidPermutation("no generators given");
  const size_t k = gens_in.front().size();
  if (k == 0) throw InvalidPermutation("permutation on zero points");
  for (const auto& p : gens_in) {
    if (p.size() != k) throw InvalidPermutation("generators act on different point sets");
    std::vector<char> hit(k, 0);
    for (int v : p) {
      if (v < 0 || static_cast<size_t>(v) >= k || hit[v])
        throw InvalidPermutation("image list is not a bijection");
      hit[v] = 1;
    }
  }

  std::vector<std::vector<int>> gens = gens_in;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<int> identity(k);
  std::iota(identity.begin(), identity.end(), 0);

  // BFS over sorted generator words (append one generator per step).
  std::map<std::vector<int>, Elt> index;
  std::vector<std::vector<int>> elems;
  elems.push_back(identity);
  index[identity] = 0;
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      auto w = compose(elems[head], g);
      if (index.emplace(w, static_cast<Elt>(elems.size())).second) {
        elems.push_back(std::move(w));
        if (static_cast<int>(elems.size()) > cap)
          throw OrderExceedsCap("group closure exceeds cap");
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<Elt> mult(static_cast<size_t>(n) * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      mult[static_cast<size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));

  std::vector<Elt> gen_ids;
  for (const auto& g : gens) {
    Elt e = index.at(g);
    if (e != GroupTable::id) gen_ids.push_back(e);
  }
  if (gen_ids.empty()) gen_ids.push_back(GroupTable::id);
  return GroupTable::from_mult_table(n, std::move(mult), std::move(gen_ids));
}

// ------------------------------------------------------------------ Subgroup

bool Subgroup::contains(Elt x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

ElementSet Subgroup::to_set() const {
  ElementSet s(parent->order());
  for (Elt m : members) s.insert(m);
  return s;
}

bool Subgroup::is_normal() const {
  const auto& G = *parent;
  for (Elt g = 0; g < G.order(); ++g)
    for (Elt m : members)
      if (!contains(G.conj(g, m))) return false;
  return true;
}

std::pair<GroupTable, std::vector<Elt>> Subgroup::to_group() const {
  const auto& G = *parent;
  // Greedy generating set within the subgroup, smallest elements first.
  std::vector<Elt> gens;
  std::vector<Elt> cl{GroupTable::id};
  if (order() > 1) {
    for (Elt m : members) {
      if (std::binary_search(cl.begin(), cl.end(), m)) continue;
      gens.push_back(m);
      cl = G.closure(gens);
      if (static_cast<int>(cl.size()) == order()) break;
    }
  }
  // BFS re-index over those generators.
  std::vector<Elt> to_parent{GroupTable::id};
  std::vector<int> sub_index(G.order(), -1);
  sub_index[GroupTable::id] = 0;
  for (size_t head = 0; head < to_parent.size(); ++head) {
    for (Elt g : gens) {
      Elt y = G.mul(to_parent[head], g);
      if (sub_index[y] < 0) {
        sub_index[y] = static_cast<int>(to_parent.size());
        to_parent.push_back(y);
      }
    }
  }
  const int n = order();
  std::vector<Elt> mult(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mult[static_cast<size_t>(a) * n + b] = sub_index[G.mul(to_parent[a], to_parent[b])];
  std::vector<Elt> sub_gens;
  for (Elt g : gens) sub_gens.push_back(sub_index[g]);
  if (sub_gens.empty()) sub_gens.push_back(GroupTable::id);
  return {GroupTable::from_mult_table(n, std::move(mult), std::move(sub_gens)),
          std::move(to_parent)};
}

// ------------------------------------------------------------------ GroupHom

bool GroupHom::verify() const {
  const int n = source->order();
  if (static_cast<int>(images.size()) != n) return false;
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (images[source->mul(x, y)] != target->mul(images[x], images[y]))
        return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> hit(target->order(), 0);
  for (Elt v : images) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::vector<Elt> GroupHom::kernel() const {
  std::vector<Elt> k;
  for (Elt x = 0; x < source->order(); ++x)
    if (images[x] == GroupTable::id) k.push_back(x);
  return k;
}

// ---------------------------------------------------------------- operations

Subgroup centralizer(const GroupTable& G, Elt x) {
  Subgroup s;
  s.parent = &G;
  for (Elt g = 0; g < G.order(); ++g)
    if (G.mul(g, x) == G.mul(x, g)) s.members.push_back(g);
  return s;
}

Subgroup subgroup_generated_by(const GroupTable& G, const std::vector<Elt>& seed) {
  Subgroup s;
  s.parent = &G;
  s.members = G.closure(seed);
  return s;
}

std::vector<Subgroup> kernels_of_epimorphisms(const GroupTable& G, const GroupTable& Q) {
  // Minimal generating sequence for G.
  std::vector<Elt> gens;
  {
    std::vector<Elt> cl{GroupTable::id};
    std::vector<Elt> pool = G.generators();
    for (Elt x = 1; x < G.order(); ++x) pool.push_back(x);
    for (Elt x : pool) {
      if (std::binary_search(cl.begin(), cl.end(), x)) continue;
      gens.push_back(x);
      cl = G.closure(gens);
      if (static_cast<int>(cl.size()) == G.order()) break;
    }
  }
  if (gens.empty()) return {};  // trivial group has no epimorphism onto |Q|>1

  // BFS definitions: every element reachable as parent * gens[gi].
  const int n = G.order();
  std::vector<int> def_parent(n, -1), def_gen(n, -1);
  std::vector<Elt> bfs{GroupTable::id};
  {
    std::vector<char> seen(n, 0);
    seen[GroupTable::id] = 1;
    for (size_t head = 0; head < bfs.size(); ++head) {
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Elt y = G.mul(bfs[head], gens[gi]);
        if (!seen[y]) {
          seen[y] = 1;
          def_parent[y] = bfs[head];
          def_gen[y] = static_cast<int>(gi);
          bfs.push_back(y);
        }
      }
    }
  }

  std::set<std::vector<Elt>> seen_kernels;
  std::vector<Subgroup> out;

  std::vector<Elt> img(gens.size(), 0);
  std::vector<Elt> phi(n, -1);
  auto try_tuple = [&]() {
    phi.assign(n, -1);
    phi[GroupTable::id] = GroupTable::id;
    for (size_t i = 1; i < bfs.size(); ++i) {
      Elt e = bfs[i];
      phi[e] = Q.mul(phi[def_parent[e]], img[def_gen[e]]);
    }
    // surjectivity
    std::vector<char> hit(Q.order(), 0);
    int distinct = 0;
    for (Elt v : phi)
      if (!hit[v]) { hit[v] = 1; ++distinct; }
    if (distinct != Q.order()) return;
    // homomorphism
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y)
        if (phi[G.mul(x, y)] != Q.mul(phi[x], phi[y])) return;
    std::vector<Elt> ker;
    for (Elt x = 0; x < n; ++x)
      if (phi[x] == GroupTable::id) ker.push_back(x);
    if (seen_kernels.insert(ker).second) {
      Subgroup s;
      s.parent = &G;
      s.members = std::move(ker);
      out.push_back(std::move(s));
    }
  };

  // Enumerate image tuples with order-divisibility pruning.
  std::vector<std::vector<Elt>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    int m = G.element_order(gens[i]);
    for (Elt q = 0; q < Q.order(); ++q)
      if (m % Q.element_order(q) == 0) candidates[i].push_back(q);
  }
  std::vector<size_t> pos(gens.size(), 0);
  size_t depth = 0;
  while (true) {
    if (depth == gens.size()) {
      try_tuple();
      if (depth == 0) break;
      --depth;
      ++pos[depth];
      continue;
    }
    if (pos[depth] >= candidates[depth].size()) {
      if (depth == 0) break;
      pos[depth] = 0;
      --depth;
      ++pos[depth];
      continue;
    }
    img[depth] = candidates[depth][pos[depth]];
    ++depth;
  }

  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
  return out;
}

namespace {

GroupTable tiny_cyclic(int n) {
  std::vector<int> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return from_permutation_generators({rot});
}

GroupTable tiny_sym3() {
  return from_permutation_generators({{1, 0, 2}, {1, 2, 0}});
}

}  // namespace

std::vector<Subgroup> normal_subgroups_of_index(const GroupTable& G, int k) {
  if (k != 2 && k != 3 && k != 6) throw BadQuotient("index must be 2, 3 or 6");
  if (G.order() % k != 0) return {};
  std::vector<Subgroup> out;
  if (k == 2) {
    out = kernels_of_epimorphisms(G, tiny_cyclic(2));
  } else if (k == 3) {
    out = kernels_of_epimorphisms(G, tiny_cyclic(3));
  } else {
    out = kernels_of_epimorphisms(G, tiny_cyclic(6));
    auto s3 = kernels_of_epimorphisms(G, tiny_sym3());
    out.insert(out.end(), s3.begin(), s3.end());
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Subgroup& a, const Subgroup& b) {
                            return a.members == b.members;
                          }),
              out.end());
  }
  return out;
}

std::pair<GroupTable, std::vector<Elt>> quotient(const GroupTable& G, const Subgroup& N) {
  if (!N.is_normal()) throw NotNormal("subgroup is not normal");
  const int n = G.order();
  std::vector<int> coset_of(n, -1);
  std::vector<Elt> reps;
  for (Elt x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elt m : N.members) coset_of[G.mul(x, m)] = c;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<Elt> mult(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      mult[static_cast<size_t>(a) * q + b] = coset_of[G.mul(reps[a], reps[b])];
  std::vector<Elt> gens;
  for (Elt g : G.generators())
    if (coset_of[g] != 0) gens.push_back(coset_of[g]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) gens.push_back(GroupTable::id);
  auto Gq = GroupTable::from_mult_table(q, std::move(mult), std::move(gens));
  return {std::move(Gq), std::move(coset_of)};
}

bool is_split_extension(const GroupTable& G, const Subgroup& N) {
  const int idx = G.order() / N.order();
  if (idx != 2 && idx != 3 && idx != 6) throw BadQuotient("index must be 2, 3 or 6");
  if (!N.is_normal()) throw NotNormal("subgroup is not normal");
  if (idx == 2 || idx == 3) {
    for (Elt x = 0; x < G.order(); ++x)
      if (!N.contains(x) && G.element_order(x) == idx) return true;
    return false;
  }
  // idx == 6: quotient is Z6 or S3.
  auto [Q, pi] = quotient(G, N);
  if (Q.is_abelian()) {
    for (Elt x = 0; x < G.order(); ++x)
      if (G.element_order(x) == 6 && Q.element_order(pi[x]) == 6) return true;
    return false;
  }
  // S3 quotient: split iff elements a,b outside N with ord(a)=2, ord(b)=3
  // and aba = b^-1 exist.
  for (Elt a = 0; a < G.order(); ++a) {
    if (N.contains(a) || G.element_order(a) != 2) continue;
    for (Elt b = 0; b < G.order(); ++b) {
      if (N.contains(b) || G.element_order(b) != 3) continue;
      if (G.mul(G.mul(a, b), a) == G.inv(b)) return true;
    }
  }
  return false;
}

// -------------------------------------------------------------- isomorphism

namespace {

std::vector<int> order_histogram(const GroupTable& G) {
  std::vector<int> h(G.exponent() + 1, 0);
  for (Elt x = 0; x < G.order(); ++x) ++h[G.element_order(x)];
  return h;
}

std::vector<std::pair<int, int>> class_profile(const GroupTable& G) {
  std::vector<std::pair<int, int>> p;
  for (int c = 0; c < G.num_classes(); ++c)
    p.emplace_back(G.element_order(G.class_rep(c)), G.class_size(c));
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<int> abelianization_orders(const GroupTable& G) {
  std::vector<Elt> comms;
  for (Elt a = 0; a < G.order(); ++a)
    for (Elt b = 0; b < G.order(); ++b) comms.push_back(G.commutator(a, b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  Subgroup derived;
  derived.parent = &G;
  derived.members = G.closure(comms);
  auto [Q, images] = quotient(G, derived);
  (void)images;
  return order_histogram(Q);
}

}  // namespace

std::optional<GroupHom> isomorphism(const GroupTable& G, const GroupTable& H) {
  if (G.order() != H.order()) return std::nullopt;
  const int n = G.order();

  // Same table: identity map.
  bool same = true;
  for (Elt a = 0; a < n && same; ++a)
    for (Elt b = 0; b < n; ++b)
      if (G.mul(a, b) != H.mul(a, b)) { same = false; break; }
  if (same) {
    GroupHom f;
    f.source = &G;
    f.target = &H;
    f.images.resize(n);
    std::iota(f.images.begin(), f.images.end(), 0);
    return f;
  }

  // Invariant prefilters reject before any backtracking.
  if (G.exponent() != H.exponent()) return std::nullopt;
  if (order_histogram(G) != order_histogram(H)) return std::nullopt;
  if (G.num_classes() != H.num_classes()) return std::nullopt;
  if (class_profile(G) != class_profile(H)) return std::nullopt;
  if (G.center().size() != H.center().size()) return std::nullopt;
  if (abelianization_orders(G) != abelianization_orders(H)) return std::nullopt;

  // Minimal generating sequence for G.
  std::vector<Elt> gens;
  {
    std::vector<Elt> cl{GroupTable::id};
    for (Elt x = 1; x < n; ++x) {
      if (std::binary_search(cl.begin(), cl.end(), x)) continue;
      gens.push_back(x);
      cl = G.closure(gens);
      if (static_cast<int>(cl.size()) == n) break;
    }
  }

  // BFS definitions over that generating sequence.
  std::vector<int> def_parent(n, -1), def_gen(n, -1);
  std::vector<Elt> bfs{GroupTable::id};
  {
    std::vector<char> seen(n, 0);
    seen[GroupTable::id] = 1;
    for (size_t head = 0; head < bfs.size(); ++head)
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Elt y = G.mul(bfs[head], gens[gi]);
        if (!seen[y]) {
          seen[y] = 1;
          def_parent[y] = bfs[head];
          def_gen[y] = static_cast<int>(gi);
          bfs.push_back(y);
        }
      }
  }

  std::vector<std::vector<Elt>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    auto fp = G.element_fingerprint(gens[i]);
    for (Elt y = 0; y < n; ++y)
      if (H.element_fingerprint(y) == fp) candidates[i].push_back(y);
  }

  std::vector<std::vector<Elt>> g_sub(gens.size());  // closure of gens[0..i]
  {
    std::vector<Elt> acc;
    for (size_t i = 0; i < gens.size(); ++i) {
      acc.push_back(gens[i]);
      g_sub[i] = G.closure(acc);
    }
  }

  std::vector<Elt> img(gens.size());
  std::vector<Elt> phi(n);
  std::optional<GroupHom> found;

  auto leaf = [&]() -> bool {
    phi[GroupTable::id] = GroupTable::id;
    for (size_t i = 1; i < bfs.size(); ++i) {
      Elt e = bfs[i];
      phi[e] = H.mul(phi[def_parent[e]], img[def_gen[e]]);
    }
    std::vector<char> hit(n, 0);
    for (Elt v : phi) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y)
        if (phi[G.mul(x, y)] != H.mul(phi[x], phi[y])) return false;
    GroupHom f;
    f.source = &G;
    f.target = &H;
    f.images = phi;
    found = std::move(f);
    return true;
  };

  std::vector<Elt> img_prefix;
  auto rec = [&](auto&& self, size_t depth) -> bool {
    if (depth == gens.size()) return leaf();
    for (Elt c : candidates[depth]) {
      img_prefix.push_back(c);
      if (H.closure(img_prefix).size() == g_sub[depth].size()) {
        img[depth] = c;
        if (self(self, depth + 1)) { img_prefix.pop_back(); return true; }
      }
      img_prefix.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace trifold
