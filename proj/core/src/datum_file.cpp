#include "trifold/datum_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "trifold/error.hpp"

namespace trifold {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail(const std::string& path, int lineno, const std::string& msg) {
  throw ParseError(path + ":" + std::to_string(lineno) + ": " + msg);
}

}  // namespace

DatumFile parse_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open datum file: " + path);

  DatumFile out;
  out.kernels.assign(3, {GroupTable::id});
  bool have_case = false, have_group = false, in_group = false;
  std::string line;
  int lineno = 0;
  long long declared_order = -1;
  std::vector<std::vector<int>> gens;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "case") {
      if (toks.size() != 2) fail(path, lineno, "case needs one value");
      if (toks[1] == "index2") out.kind = DatumFile::Kind::index2;
      else if (toks[1] == "index3") out.kind = DatumFile::Kind::index3;
      else if (toks[1] == "index6") out.kind = DatumFile::Kind::index6;
      else if (toks[1] == "unmixed") out.kind = DatumFile::Kind::unmixed;
      else fail(path, lineno, "unknown case: " + toks[1]);
      have_case = true;
    } else if (toks[0] == "group") {
      if (have_group || in_group) fail(path, lineno, "only one group block allowed");
      if (toks.size() < 4 || toks[2] != "order")
        fail(path, lineno, "expected: group <name> order <n>");
      out.group_name = toks[1];
      try {
        declared_order = std::stoll(toks[3]);
      } catch (...) {
        fail(path, lineno, "bad order");
      }
      in_group = true;
      gens.clear();
    } else if (toks[0] == "gen") {
      if (!in_group) fail(path, lineno, "gen outside group block");
      long long k = 0;
      try {
        k = std::stoll(toks.at(1));
      } catch (...) {
        fail(path, lineno, "bad point count");
      }
      if (k < 1 || k > 10000) fail(path, lineno, "point count out of range");
      if (static_cast<long long>(toks.size()) != 2 + k)
        fail(path, lineno, "expected " + std::to_string(k) + " images");
      std::vector<int> perm(k);
      for (long long i = 0; i < k; ++i) {
        try {
          perm[i] = std::stoi(toks[2 + i]);
        } catch (...) {
          fail(path, lineno, "bad image");
        }
      }
      gens.push_back(std::move(perm));
    } else if (toks[0] == "end") {
      if (!in_group) fail(path, lineno, "end outside group block");
      try {
        out.G = from_permutation_generators(
            gens, std::max<long long>(declared_order + 1, kDefaultOrderCap));
      } catch (const Error& e) {
        fail(path, lineno, e.what());
      }
      if (out.G.order() != declared_order)
        fail(path, lineno, "group order mismatch");
      in_group = false;
      have_group = true;
    } else if (toks[0] == "vector") {
      if (!have_group) fail(path, lineno, "vector before group block");
      if (toks.size() < 5 || toks[2] != "type" || toks[4] != "elems")
        fail(path, lineno, "expected: vector <which> type <T> elems <indices...>");
      DatumFile::VectorSpec spec;
      try {
        spec.which = std::stoi(toks[1]);
        spec.type = BranchType::parse(toks[3]);
      } catch (const ParseError&) {
        throw;
      } catch (...) {
        fail(path, lineno, "bad vector header");
      }
      if (spec.which < 1 || spec.which > 3) fail(path, lineno, "vector index must be 1..3");
      for (size_t i = 5; i < toks.size(); ++i) {
        int e = 0;
        try {
          e = std::stoi(toks[i]);
        } catch (...) {
          fail(path, lineno, "bad element index");
        }
        if (e < 0 || e >= out.G.order()) fail(path, lineno, "element index out of range");
        spec.lifts.push_back(e);
      }
      if (static_cast<int>(spec.lifts.size()) != spec.type.r() + 2 * spec.type.g_prime)
        fail(path, lineno, "wrong number of vector entries for the type");
      out.vectors.push_back(std::move(spec));
    } else if (toks[0] == "kernel") {
      if (!have_group) fail(path, lineno, "kernel before group block");
      if (toks.size() < 2) fail(path, lineno, "kernel needs a slot");
      int which = 0;
      try {
        which = std::stoi(toks[1]);
      } catch (...) {
        fail(path, lineno, "bad kernel slot");
      }
      if (which < 1 || which > 3) fail(path, lineno, "kernel slot must be 1..3");
      std::vector<Elt> members{GroupTable::id};
      for (size_t i = 2; i < toks.size(); ++i) {
        int e = 0;
        try {
          e = std::stoi(toks[i]);
        } catch (...) {
          fail(path, lineno, "bad kernel element");
        }
        if (e < 0 || e >= out.G.order()) fail(path, lineno, "kernel element out of range");
        members.push_back(e);
      }
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      out.kernels[which - 1] = std::move(members);
    } else if (toks[0] == "coset") {
      if (!have_group) fail(path, lineno, "coset before group block");
      if (toks.size() != 3) fail(path, lineno, "expected: coset tau|h <index>");
      int e = 0;
      try {
        e = std::stoi(toks[2]);
      } catch (...) {
        fail(path, lineno, "bad coset element");
      }
      if (e < 0 || e >= out.G.order()) fail(path, lineno, "coset element out of range");
      if (toks[1] == "tau") out.tau = e;
      else if (toks[1] == "h") out.h = e;
      else fail(path, lineno, "coset must be tau or h");
    } else {
      fail(path, lineno, "unknown directive: " + toks[0]);
    }
  }
  if (!have_group) throw ParseError(path + ": missing group block");
  if (!have_case) throw ParseError(path + ": missing case line");
  if (in_group) throw ParseError(path + ": unterminated group block");
  return out;
}

// ---------------------------------------------------------------- verifier

namespace {

struct ActingSlot {
  Subgroup domain;           // inside G
  GroupTable domain_grp;
  std::vector<Elt> embed;    // domain_grp index -> G index
  GroupTable quotient_grp;   // domain / kernel
  std::vector<Elt> to_q;     // per G element, image in quotient or -1
  GeneratingVector vec;      // on quotient_grp
  ElementSet sigma;          // pre-image stabilizer, G indices
  std::vector<Elt> kernel;   // G indices
  long long genus = 0;
};

ActingSlot build_slot(const GroupTable& G, const DatumFile::VectorSpec& spec,
                      const std::vector<Elt>& kernel_members,
                      const std::vector<Elt>* forced_domain) {
  ActingSlot slot;
  slot.kernel = kernel_members;
  slot.domain.parent = &G;
  if (forced_domain) {
    slot.domain.members = *forced_domain;
  } else {
    std::vector<Elt> seed = spec.lifts;
    seed.insert(seed.end(), kernel_members.begin(), kernel_members.end());
    slot.domain.members = G.closure(seed);
  }
  for (Elt k : kernel_members)
    if (!slot.domain.contains(k)) throw BadShape("kernel not inside the acting subgroup");
  for (Elt l : spec.lifts)
    if (!slot.domain.contains(l)) throw BadShape("vector entry outside the acting subgroup");

  auto [dg, embed] = slot.domain.to_group();
  slot.domain_grp = std::move(dg);
  slot.embed = std::move(embed);
  std::vector<int> inv_embed(G.order(), -1);
  for (size_t i = 0; i < slot.embed.size(); ++i) inv_embed[slot.embed[i]] = static_cast<int>(i);

  Subgroup K;
  K.parent = &slot.domain_grp;
  for (Elt k : kernel_members) K.members.push_back(inv_embed[k]);
  std::sort(K.members.begin(), K.members.end());
  if (slot.domain_grp.closure(K.members) != K.members)
    throw BadShape("kernel is not a subgroup");
  auto [q, images] = quotient(slot.domain_grp, K);  // throws NotNormal if needed
  slot.quotient_grp = std::move(q);
  slot.to_q.assign(G.order(), -1);
  for (int i = 0; i < slot.domain_grp.order(); ++i)
    slot.to_q[slot.embed[i]] = images[i];

  slot.vec.group = &slot.quotient_grp;
  slot.vec.type = spec.type;
  const int r = spec.type.r();
  for (int i = 0; i < static_cast<int>(spec.lifts.size()); ++i) {
    Elt img = slot.to_q[spec.lifts[i]];
    if (i < r)
      slot.vec.elliptic.push_back(img);
    else
      slot.vec.hyperbolic.push_back(img);
  }
  if (!slot.vec.is_valid())
    throw Error("entries do not form a generating vector of type " + spec.type.str());

  auto stab = stabilizer_set(slot.vec);
  slot.sigma = ElementSet(G.order());
  for (Elt x : slot.domain.members)
    if (stab.contains(slot.to_q[x])) slot.sigma.insert(x);

  auto g = hurwitz_genus(slot.quotient_grp.order(), 1, spec.type);
  if (!g) throw Error("non-integral genus");
  slot.genus = *g;
  return slot;
}

const DatumFile::VectorSpec& find_vector(const DatumFile& f, int which) {
  for (const auto& v : f.vectors)
    if (v.which == which) return v;
  throw ParseError("datum file lacks vector " + std::to_string(which));
}

std::vector<Cyclotomic> chi_on_G(const GroupTable& G, const ActingSlot& slot) {
  auto chi = chevalley_weil(slot.vec);
  std::vector<Cyclotomic> out(G.order(), Cyclotomic(0));
  for (Elt x : slot.domain.members) out[x] = chi.at(slot.to_q[x]);
  return out;
}

void check_trivial_intersection(const std::vector<Elt>& a, const std::vector<Elt>& b,
                                const std::string& what) {
  for (Elt x : a) {
    if (x == GroupTable::id) continue;
    if (std::binary_search(b.begin(), b.end(), x))
      throw NotMinimal(what + " intersect non-trivially");
  }
}

}  // namespace

DatumVerification verify_datum(const DatumFile& f) {
  const GroupTable& G = f.G;
  DatumVerification out;

  std::vector<Elt> whole(G.order());
  for (Elt x = 0; x < G.order(); ++x) whole[x] = x;

  switch (f.kind) {
    case DatumFile::Kind::unmixed: {
      ActingSlot s[3] = {build_slot(G, find_vector(f, 1), f.kernels[0], &whole),
                         build_slot(G, find_vector(f, 2), f.kernels[1], &whole),
                         build_slot(G, find_vector(f, 3), f.kernels[2], &whole)};
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          check_trivial_intersection(s[i].kernel, s[j].kernel, "kernels");
      ElementSet meet = s[0].sigma;
      meet &= s[1].sigma;
      meet &= s[2].sigma;
      out.free = meet.is_identity_only();
      out.genera = {s[0].genus, s[1].genus, s[2].genus};
      if (out.free)
        out.diamond = hodge_diamond_unmixed(G, chi_on_G(G, s[0]), chi_on_G(G, s[1]),
                                            chi_on_G(G, s[2]));
      break;
    }
    case DatumFile::Kind::index2: {
      ActingSlot s1 = build_slot(G, find_vector(f, 1), f.kernels[0], &whole);
      ActingSlot s2 = build_slot(G, find_vector(f, 2), f.kernels[1], nullptr);
      if (2 * s2.domain.order() != G.order())
        throw BadShape("second acting subgroup must have index two");
      Elt delta = -1;
      for (Elt x = 0; x < G.order() && delta < 0; ++x)
        if (!s2.domain.contains(x)) delta = x;
      check_trivial_intersection(s1.kernel, s2.kernel, "kernels K1 and K2");
      std::vector<Elt> k2_conj;
      for (Elt k : s2.kernel) k2_conj.push_back(G.conj(delta, k));
      std::sort(k2_conj.begin(), k2_conj.end());
      check_trivial_intersection(s2.kernel, k2_conj, "K2 and its delta conjugate");

      out.free = free_index2(G, s2.domain, s1.sigma, s2.sigma, delta);
      out.genera = {s1.genus, s2.genus, s2.genus};
      if (out.free) {
        MixedHodgeInput in;
        in.mixed_case = MixedCase::index2;
        in.G = &G;
        in.in_diagonal.assign(G.order(), 0);
        for (Elt m : s2.domain.members) in.in_diagonal[m] = 1;
        in.witness = delta;
        in.chi1 = chi_on_G(G, s1);
        in.chi2 = chi_on_G(G, s2);
        out.diamond = hodge_diamond_mixed(in);
      }
      break;
    }
    case DatumFile::Kind::index3: {
      ActingSlot s1 = build_slot(G, find_vector(f, 1), f.kernels[0], nullptr);
      if (3 * s1.domain.order() != G.order())
        throw BadShape("diagonal subgroup must have index three");
      if (!s1.domain.is_normal()) throw NotNormal("diagonal subgroup is not normal");
      Elt tau = f.tau.value_or(-1);
      if (tau < 0)
        for (Elt x = 0; x < G.order() && tau < 0; ++x)
          if (!s1.domain.contains(x)) tau = x;
      std::vector<Elt> k_conj;
      for (Elt k : s1.kernel) k_conj.push_back(G.conj(tau, k));
      std::sort(k_conj.begin(), k_conj.end());
      check_trivial_intersection(s1.kernel, k_conj, "K1 and its tau conjugate");

      out.free = free_index3(G, s1.domain, s1.sigma, tau);
      if (out.free) {
        // cube condition: (tau g)^3 avoids the stabilizer set
        for (Elt g : s1.domain.members) {
          Elt t = G.mul(tau, g);
          if (s1.sigma.contains(G.mul(G.mul(t, t), t))) { out.free = false; break; }
        }
      }
      out.genera = {s1.genus, s1.genus, s1.genus};
      if (out.free) {
        MixedHodgeInput in;
        in.mixed_case = MixedCase::index3;
        in.G = &G;
        in.in_diagonal.assign(G.order(), 0);
        for (Elt m : s1.domain.members) in.in_diagonal[m] = 1;
        in.witness = tau;
        in.chi1 = chi_on_G(G, s1);
        out.diamond = hodge_diamond_mixed(in);
      }
      break;
    }
    case DatumFile::Kind::index6: {
      ActingSlot s1 = build_slot(G, find_vector(f, 1), f.kernels[0], nullptr);
      if (3 * s1.domain.order() != G.order())
        throw BadShape("G1 must have index three");
      if (!f.tau) throw BadShape("index six datum needs a tau coset element");
      Elt tau = *f.tau;
      // diagonal = G1 and its tau conjugates
      Subgroup G0;
      G0.parent = &G;
      for (Elt x : s1.domain.members) {
        Elt c1 = G.conj(G.inv(tau), x);
        Elt c2 = G.conj(G.inv(G.mul(tau, tau)), x);
        if (s1.domain.contains(c1) && s1.domain.contains(c2)) G0.members.push_back(x);
      }
      if (6 * G0.order() != G.order())
        throw BadShape("diagonal subgroup must have index six");
      if (!G0.is_normal()) throw NotNormal("diagonal subgroup is not normal");
      Elt h = f.h.value_or(-1);
      if (h < 0)
        for (Elt x : s1.domain.members)
          if (!G0.contains(x)) { h = x; break; }
      std::vector<Elt> k_conj;
      for (Elt k : s1.kernel) k_conj.push_back(G.conj(tau, k));
      std::sort(k_conj.begin(), k_conj.end());
      check_trivial_intersection(s1.kernel, k_conj, "K1 and its tau conjugate");

      out.free = free_index6(G, G0, s1.domain, s1.sigma, tau, h);
      out.genera = {s1.genus, s1.genus, s1.genus};
      if (out.free) {
        MixedHodgeInput in;
        in.mixed_case = MixedCase::index6;
        in.G = &G;
        in.in_diagonal.assign(G.order(), 0);
        for (Elt m : G0.members) in.in_diagonal[m] = 1;
        in.witness = tau;
        in.h_elt = h;
        in.chi1 = chi_on_G(G, s1);
        out.diamond = hodge_diamond_mixed(in);
      }
      break;
    }
  }
  if (out.free) out.chern = chern_invariants(out.diamond.chi());
  return out;
}

}  // namespace trifold
