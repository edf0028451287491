#include "trifold/riemann.hpp"

#include <algorithm>
#include <map>

#include "trifold/error.hpp"

namespace trifold {

// ---------------------------------------------------------------- BranchType

void BranchType::canonicalize() { std::sort(orders.begin(), orders.end()); }

std::string BranchType::str() const {
  std::string out = "[" + std::to_string(g_prime) + ";";
  if (orders.empty()) {
    out += "-";
  } else {
    size_t i = 0;
    bool first = true;
    while (i < orders.size()) {
      size_t j = i;
      while (j < orders.size() && orders[j] == orders[i]) ++j;
      if (!first) out += ",";
      first = false;
      out += std::to_string(orders[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out + "]";
}

BranchType BranchType::parse(const std::string& text) {
  auto fail = [&]() -> void { throw ParseError("bad branch type: " + text); };
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.size() < 4 || s.front() != '[' || s.back() != ']') fail();
  s = s.substr(1, s.size() - 2);
  auto semi = s.find(';');
  if (semi == std::string::npos) fail();
  BranchType t;
  try {
    size_t used = 0;
    t.g_prime = std::stoi(s.substr(0, semi), &used);
    if (used != semi) fail();
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    fail();
  }
  if (t.g_prime < 0) fail();
  std::string rest = s.substr(semi + 1);
  if (rest.empty()) fail();
  if (rest != "-") {
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos
                                              ? std::string::npos
                                              : comma - pos);
      if (item.empty()) fail();
      int m = 0, e = 1;
      auto caret = item.find('^');
      try {
        if (caret == std::string::npos) {
          m = std::stoi(item);
        } else {
          m = std::stoi(item.substr(0, caret));
          e = std::stoi(item.substr(caret + 1));
        }
      } catch (...) {
        fail();
      }
      if (m < 2 || e < 1) fail();
      for (int k = 0; k < e; ++k) t.orders.push_back(m);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  t.canonicalize();
  return t;
}

std::optional<long long> hurwitz_genus(long long group_order, long long kernel_order,
                                       const BranchType& type) {
  Rational acc(2LL * type.g_prime - 2);
  for (int m : type.orders) acc += Rational(m - 1, m);
  Rational g = Rational(group_order, 2 * kernel_order) * acc + Rational(1);
  if (!g.is_integer()) return std::nullopt;
  return g.num();
}

// --------------------------------------------------------------- enumeration

std::vector<Elt> GeneratingVector::entries() const {
  std::vector<Elt> e = elliptic;
  e.insert(e.end(), hyperbolic.begin(), hyperbolic.end());
  return e;
}

bool GeneratingVector::long_relation_holds() const {
  const auto& G = *group;
  Elt acc = GroupTable::id;
  for (Elt h : elliptic) acc = G.mul(acc, h);
  for (size_t i = 0; i + 1 < hyperbolic.size(); i += 2)
    acc = G.mul(acc, G.commutator(hyperbolic[i], hyperbolic[i + 1]));
  return acc == GroupTable::id;
}

bool GeneratingVector::is_valid() const {
  if (static_cast<int>(elliptic.size()) != type.r()) return false;
  if (static_cast<int>(hyperbolic.size()) != 2 * type.g_prime) return false;
  for (int j = 0; j < type.r(); ++j)
    if (group->element_order(elliptic[j]) != type.orders[j]) return false;
  if (!long_relation_holds()) return false;
  return group->generates(entries());
}

namespace {

struct EnumContext {
  const GroupTable* H;
  const BranchType* type;
  const VectorSink* sink;
  std::vector<std::vector<Elt>> buckets;          // candidates per elliptic slot
  std::vector<std::vector<std::pair<Elt, Elt>>> comm_buckets;  // by commutator
  std::map<std::vector<Elt>, bool> generation_memo;
  bool stopped = false;

  bool generates(const std::vector<Elt>& elliptic, const std::vector<Elt>& hyper) {
    std::vector<Elt> key = elliptic;
    key.insert(key.end(), hyper.begin(), hyper.end());
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = generation_memo.find(key);
    if (it != generation_memo.end()) return it->second;
    bool gen = H->generates(key);
    generation_memo.emplace(std::move(key), gen);
    return gen;
  }

  void emit(const std::vector<Elt>& elliptic, const std::vector<Elt>& hyper) {
    if (stopped) return;
    if (!generates(elliptic, hyper)) return;
    GeneratingVector v;
    v.group = H;
    v.type = *type;
    v.elliptic = elliptic;
    v.hyperbolic = hyper;
    if (!(*sink)(v)) stopped = true;
  }

  // fills the hyperbolic part so that prefix * prod [a,b] == id
  void hyperbolic_rec(const std::vector<Elt>& elliptic, std::vector<Elt>& hyper,
                      Elt acc, int pair_index) {
    if (stopped) return;
    const int g = type->g_prime;
    if (g == 0) {
      if (acc == GroupTable::id) emit(elliptic, hyper);
      return;
    }
    if (pair_index == g - 1) {
      // last pair from the commutator index: need [a,b] == acc^{-1}
      for (auto [a, b] : comm_buckets[H->inv(acc)]) {
        hyper.push_back(a);
        hyper.push_back(b);
        emit(elliptic, hyper);
        hyper.pop_back();
        hyper.pop_back();
        if (stopped) return;
      }
      return;
    }
    for (Elt a = 0; a < H->order() && !stopped; ++a)
      for (Elt b = 0; b < H->order() && !stopped; ++b) {
        hyper.push_back(a);
        hyper.push_back(b);
        hyperbolic_rec(elliptic, hyper, H->mul(acc, H->commutator(a, b)), pair_index + 1);
        hyper.pop_back();
        hyper.pop_back();
      }
  }

  void elliptic_rec(std::vector<Elt>& elliptic, Elt acc, int slot) {
    if (stopped) return;
    const int r = type->r();
    if (slot == r) {
      if (type->g_prime == 0) {
        if (acc == GroupTable::id) {
          std::vector<Elt> empty_hyper;
          emit(elliptic, empty_hyper);
        }
      } else {
        std::vector<Elt> hyper;
        hyperbolic_rec(elliptic, hyper, acc, 0);
      }
      return;
    }
    if (type->g_prime == 0 && slot == r - 1 && r >= 1) {
      // forced last elliptic entry
      Elt need = H->inv(acc);
      if (H->element_order(need) == type->orders[slot]) {
        elliptic.push_back(need);
        std::vector<Elt> empty_hyper;
        emit(elliptic, empty_hyper);
        elliptic.pop_back();
      }
      return;
    }
    for (Elt h : buckets[slot]) {
      elliptic.push_back(h);
      elliptic_rec(elliptic, H->mul(acc, h), slot + 1);
      elliptic.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

void enumerate_generating_vectors(const GroupTable& H, const BranchType& type,
                                  const VectorSink& sink) {
  EnumContext ctx;
  ctx.H = &H;
  ctx.type = &type;
  ctx.sink = &sink;

  ctx.buckets.resize(type.r());
  for (int j = 0; j < type.r(); ++j) {
    for (Elt x = 0; x < H.order(); ++x)
      if (H.element_order(x) == type.orders[j]) ctx.buckets[j].push_back(x);
    if (ctx.buckets[j].empty()) return;
  }
  if (type.g_prime > 0) {
    ctx.comm_buckets.assign(H.order(), {});
    for (Elt a = 0; a < H.order(); ++a)
      for (Elt b = 0; b < H.order(); ++b)
        ctx.comm_buckets[H.commutator(a, b)].emplace_back(a, b);
  }

  std::vector<Elt> elliptic;
  ctx.elliptic_rec(elliptic, GroupTable::id, 0);
}

std::vector<GeneratingVector> all_generating_vectors(const GroupTable& H,
                                                     const BranchType& type) {
  std::vector<GeneratingVector> out;
  enumerate_generating_vectors(H, type, [&](const GeneratingVector& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

long long count_generating_vectors(const GroupTable& H, const BranchType& type) {
  long long n = 0;
  enumerate_generating_vectors(H, type, [&](const GeneratingVector&) {
    ++n;
    return true;
  });
  return n;
}

bool exists_generating_vector(const GroupTable& H, const BranchType& type) {
  bool found = false;
  enumerate_generating_vectors(H, type, [&](const GeneratingVector&) {
    found = true;
    return false;
  });
  return found;
}

// ------------------------------------------------------------ stabilizer set

ElementSet stabilizer_set(const GeneratingVector& V) {
  const auto& H = *V.group;
  ElementSet sigma(H.order());
  sigma.insert(GroupTable::id);
  for (Elt h : V.elliptic) {
    Elt p = GroupTable::id;
    for (int i = 0; i < H.element_order(h); ++i) {
      for (Elt c : H.conjugacy_classes()[H.class_of(p)]) sigma.insert(c);
      p = H.mul(p, h);
    }
  }
  return sigma;
}

ElementSet preimage_stabilizer(const GroupTable& source,
                               const std::vector<Elt>& quotient_images,
                               const ElementSet& sigma_bar) {
  if (static_cast<int>(quotient_images.size()) != source.order())
    throw GroupMismatch("quotient images do not cover the source group");
  ElementSet out(source.order());
  for (Elt x = 0; x < source.order(); ++x)
    if (sigma_bar.contains(quotient_images[x])) out.insert(x);
  return out;
}

long long fixed_point_count(const GeneratingVector& V, Elt h) {
  if (h == GroupTable::id) throw IdentityElement("fixed points of the identity");
  const auto& H = *V.group;
  const int ch = H.class_of(h);
  const long long cent = H.centralizer_order(h);
  long long count = 0;
  for (int j = 0; j < V.type.r(); ++j) {
    const int m = V.type.orders[j];
    Elt p = V.elliptic[j];
    for (int t = 1; t < m; ++t) {
      if (H.class_of(p) == ch) count += cent / m;
      p = H.mul(p, V.elliptic[j]);
    }
  }
  return count;
}

// ------------------------------------------------------------ Chevalley-Weil

ClassFunction chevalley_weil(const GeneratingVector& V) {
  const auto& H = *V.group;
  const int E = H.exponent();
  auto genus = hurwitz_genus(H.order(), 1, V.type);
  if (!genus) throw Error("non-integral genus for a generating vector");

  std::vector<Cyclotomic> vals(H.num_classes());
  vals[0] = Cyclotomic(*genus);
  for (int c = 1; c < H.num_classes(); ++c) {
    const Elt x = H.class_rep(c);
    const long long cent = H.centralizer_order(x);
    Cyclotomic acc(1);
    for (int j = 0; j < V.type.r(); ++j) {
      const int m = V.type.orders[j];
      Elt p = V.elliptic[j];
      for (int t = 1; t < m; ++t) {
        if (H.class_of(p) == c) {
          auto zeta_t = Cyclotomic::root_of_unity(E, static_cast<long long>(t) * (E / m));
          acc += Cyclotomic(Rational(cent, m)) * (zeta_t - Cyclotomic(1)).inverse();
        }
        p = H.mul(p, V.elliptic[j]);
      }
    }
    vals[c] = std::move(acc);
  }
  return ClassFunction(&H, std::move(vals));
}

ClassFunction chevalley_weil_from_table(const GeneratingVector& V,
                                        const CharacterTable& table) {
  const auto& H = *V.group;
  if (table.group != &H) throw GroupMismatch("table computed for another group");
  const int E = H.exponent();
  const int r = H.num_classes();

  std::vector<Cyclotomic> vals(r, Cyclotomic(0));
  for (int u = 0; u < r; ++u) {
    const auto& chi = table.irreducibles[u];
    Rational mult(static_cast<long long>(table.degrees[u]) * (V.type.g_prime - 1));
    if (u == 0) mult += Rational(1);  // trivial character
    for (int j = 0; j < V.type.r(); ++j) {
      const int m = V.type.orders[j];
      // eigenvalue multiplicities of chi(h_j): N_alpha via Fourier inversion
      for (int alpha = 1; alpha < m; ++alpha) {
        Cyclotomic n_alpha(0);
        Elt p = GroupTable::id;
        for (int t = 0; t < m; ++t) {
          n_alpha += chi.at(p) *
                     Cyclotomic::root_of_unity(E, -static_cast<long long>(alpha) * t * (E / m));
          p = H.mul(p, V.elliptic[j]);
        }
        Rational count = (n_alpha / Cyclotomic(m)).rational_value();
        if (!count.is_integer() || count < Rational(0))
          throw Error("eigenvalue multiplicity is not a non-negative integer");
        mult += Rational(alpha, m) * count;
      }
    }
    if (!mult.is_integer() || mult < Rational(0))
      throw Error("character multiplicity is not a non-negative integer");
    if (mult.is_zero()) continue;
    for (int c = 0; c < r; ++c)
      vals[c] += Cyclotomic(mult) * chi.at_class(c);
  }
  return ClassFunction(&H, std::move(vals));
}

}  // namespace trifold
