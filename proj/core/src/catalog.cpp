#include "trifold/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "trifold/error.hpp"

namespace trifold {

std::string CatalogEntry::id_str() const {
  if (!external_id) return "-";
  return std::to_string(external_id->first) + "," + std::to_string(external_id->second);
}

std::vector<const CatalogEntry*> Catalog::of_order(long long n) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.order == n) out.push_back(&e);
  return out;
}

std::vector<const CatalogEntry*> Catalog::complete_catalog(long long n) const {
  if (!is_complete(n))
    throw IncompleteOrder("no complete catalog for order " + std::to_string(n));
  return of_order(n);
}

const CatalogEntry* Catalog::identify(const GroupTable& G) const {
  for (const auto& e : entries_) {
    if (e.order != G.order()) continue;
    if (isomorphism(e.group, G).has_value()) return &e;
  }
  return nullptr;
}

const CatalogEntry* Catalog::add(std::string name, GroupTable group,
                                 std::optional<std::pair<long long, long long>> id,
                                 std::vector<std::string>* warnings) {
  for (auto& e : entries_) {
    if (e.order != group.order()) continue;
    if (isomorphism(e.group, group).has_value()) {
      if (warnings)
        warnings->push_back("duplicate isomorphism class: " + name + " ~ " + e.name);
      if (id && !e.external_id) e.external_id = id;
      return &e;
    }
  }
  // disambiguate name collisions
  std::string final_name = name;
  int suffix = 2;
  auto name_taken = [&](const std::string& s) {
    for (const auto& e : entries_)
      if (e.name == s) return true;
    return false;
  };
  while (name_taken(final_name)) final_name = name + "#" + std::to_string(suffix++);

  CatalogEntry e;
  e.name = std::move(final_name);
  e.order = group.order();
  e.group = std::move(group);
  e.external_id = id;
  entries_.push_back(std::move(e));
  return &entries_.back();
}

namespace {

GroupTable power_product(const GroupTable& base, int copies) {
  GroupTable acc = base;
  for (int i = 1; i < copies; ++i) acc = direct_product(acc, base);
  return acc;
}

}  // namespace

Catalog Catalog::with_builtins() {
  Catalog cat;
  auto Z = [](int n) { return make_named(Family::cyclic, n); };
  auto D = [](int n) { return make_named(Family::dihedral, n); };

  auto add = [&cat](const std::string& name, GroupTable g) {
    cat.add(name, std::move(g), std::nullopt, nullptr);
  };

  // complete catalogs for orders 1..16
  add("Z1", Z(1));
  add("Z2", Z(2));
  add("Z3", Z(3));
  add("Z4", Z(4));
  add("Z2^2", power_product(Z(2), 2));
  add("Z5", Z(5));
  add("Z6", Z(6));
  add("S3", make_named(Family::symmetric, 3));
  add("Z7", Z(7));
  add("Z8", Z(8));
  add("Z4xZ2", direct_product(Z(4), Z(2)));
  add("Z2^3", power_product(Z(2), 3));
  add("D4", D(4));
  add("Q8", make_named(Family::quaternion));
  add("Z9", Z(9));
  add("Z3^2", power_product(Z(3), 2));
  add("Z10", Z(10));
  add("D5", D(5));
  add("Z11", Z(11));
  add("Z12", Z(12));
  add("Z6xZ2", direct_product(Z(6), Z(2)));
  add("D6", D(6));
  add("A4", make_named(Family::alternating, 4));
  add("Dic12", make_named(Family::dicyclic, 12));
  add("Z13", Z(13));
  add("Z14", Z(14));
  add("D7", D(7));
  add("Z15", Z(15));

  // order 16
  add("Z16", Z(16));
  add("Z4^2", power_product(Z(4), 2));
  {
    auto n = power_product(Z(2), 2);
    // swap the two factors: pairs (a,b) indexed a*2+b
    std::vector<Elt> swap_factors{0, 2, 1, 3};
    auto action = action_from_generator_images(n, Z(4), {swap_factors});
    add("Z2^2:Z4", semidirect_product(n, Z(4), action));
  }
  {
    auto n = Z(4);
    std::vector<Elt> invert{0, 3, 2, 1};
    auto action = action_from_generator_images(n, Z(4), {invert});
    add("Z4:Z4", semidirect_product(n, Z(4), action));
  }
  add("Z8xZ2", direct_product(Z(8), Z(2)));
  add("M16", make_named(Family::m16));
  add("D8", D(8));
  add("SD16", make_named(Family::semidihedral, 16));
  add("Dic16", make_named(Family::dicyclic, 16));
  add("Z4xZ2^2", direct_product(Z(4), power_product(Z(2), 2)));
  add("D4xZ2", direct_product(D(4), Z(2)));
  add("Q8xZ2", direct_product(make_named(Family::quaternion), Z(2)));
  {
    auto d4 = D(4);
    auto z4 = Z(4);
    Elt center_elt = -1;
    for (Elt x : d4.center())
      if (x != GroupTable::id) center_elt = x;
    std::vector<std::pair<Elt, Elt>> phi{{GroupTable::id, GroupTable::id},
                                         {center_elt, z4.pow(1, 2)}};
    add("D4*Z4", central_product(d4, z4, phi));
  }
  add("Z2^4", power_product(Z(2), 4));

  // order 27
  add("Z27", Z(27));
  add("Z9xZ3", direct_product(Z(9), Z(3)));
  {
    auto n = power_product(Z(3), 2);  // pairs (a,b) indexed a*3+b
    std::vector<Elt> shear(9);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) shear[a * 3 + b] = a * 3 + (a + b) % 3;
    auto action = action_from_generator_images(n, Z(3), {shear});
    add("He3", semidirect_product(n, Z(3), action));
  }
  {
    auto n = Z(9);
    std::vector<Elt> quad(9);
    for (int k = 0; k < 9; ++k) quad[k] = (4 * k) % 9;
    auto action = action_from_generator_images(n, Z(3), {quad});
    add("Z9:Z3", semidirect_product(n, Z(3), action));
  }
  add("Z3^3", power_product(Z(3), 3));

  for (long long n = 1; n <= 16; ++n) cat.mark_complete(n);
  cat.mark_complete(27);

  // named groups beyond the complete range (classification table columns,
  // test corpus); no completeness claim for their orders
  add("Z20", Z(20));
  add("D10", D(10));
  add("Dic20", make_named(Family::dicyclic, 20));
  add("Z2^2xZ5", direct_product(power_product(Z(2), 2), Z(5)));
  add("Z7:Z3", [&] {
    auto n = Z(7);
    std::vector<Elt> sq(7);
    for (int k = 0; k < 7; ++k) sq[k] = (2 * k) % 7;
    auto action = action_from_generator_images(n, Z(3), {sq});
    return semidirect_product(n, Z(3), action);
  }());
  add("S4", make_named(Family::symmetric, 4));
  add("SL(2,3)", make_named(Family::sl2_3));
  add("Dic24", make_named(Family::dicyclic, 24));
  add("S3xZ4", direct_product(make_named(Family::symmetric, 3), Z(4)));
  add("D12", D(12));
  add("Dic12xZ2", direct_product(make_named(Family::dicyclic, 12), Z(2)));
  add("Z6xZ4", direct_product(Z(6), Z(4)));
  add("D4xZ3", direct_product(D(4), Z(3)));
  add("D6xZ2", direct_product(D(6), Z(2)));
  add("Z2^3xZ3", direct_product(power_product(Z(2), 3), Z(3)));
  add("Hol(Z8)", make_named(Family::holomorph_cyclic, 8));
  add("SD16xZ2", direct_product(make_named(Family::semidihedral, 16), Z(2)));
  add("D4xZ4", direct_product(D(4), Z(4)));
  {
    auto d8 = D(8);
    auto z4 = Z(4);
    Elt center_elt = -1;
    for (Elt x : d8.center())
      if (x != GroupTable::id) center_elt = x;
    std::vector<std::pair<Elt, Elt>> phi{{GroupTable::id, GroupTable::id},
                                         {center_elt, z4.pow(1, 2)}};
    add("D8*Z4", central_product(d8, z4, phi));
  }
  add("2O", make_named(Family::binary_octahedral));
  add("GL(2,3)", make_named(Family::gl2_3));
  add("SL(2,3)xZ2", direct_product(make_named(Family::sl2_3), Z(2)));
  add("D4xS3", direct_product(D(4), make_named(Family::symmetric, 3)));
  add("S4xZ4", direct_product(make_named(Family::symmetric, 4), Z(4)));
  add("GL(2,3)xZ2", direct_product(make_named(Family::gl2_3), Z(2)));

  return cat;
}

// ------------------------------------------------------------------ file io

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void parse_fail(const std::string& path, int lineno, const std::string& msg) {
  throw ParseError(path + ":" + std::to_string(lineno) + ": " + msg);
}

}  // namespace

size_t Catalog::import_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file: " + path);

  size_t added = 0;
  std::set<long long> orders_in_file;
  std::string line;
  int lineno = 0;

  std::string name;
  long long order = -1;
  std::optional<std::pair<long long, long long>> id;
  std::vector<std::vector<int>> gens;
  bool in_group = false;

  auto flush_group = [&](int at_line) {
    if (gens.empty()) parse_fail(path, at_line, "group block without generators");
    GroupTable g;
    try {
      g = from_permutation_generators(gens, std::max<long long>(order + 1, kDefaultOrderCap));
    } catch (const Error& e) {
      parse_fail(path, at_line, e.what());
    }
    if (g.order() != order)
      throw AxiomViolation(path + ": group '" + name + "' has order " +
                           std::to_string(g.order()) + ", declared " +
                           std::to_string(order));
    size_t before = entries_.size();
    add(name, std::move(g), id, warnings);
    if (entries_.size() > before) ++added;
    orders_in_file.insert(order);
    in_group = false;
    gens.clear();
    id.reset();
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "group") {
      if (in_group) parse_fail(path, lineno, "nested group block");
      if (toks.size() < 4 || toks[2] != "order")
        parse_fail(path, lineno, "expected: group <name> order <n> [id a,b]");
      name = toks[1];
      try {
        order = std::stoll(toks[3]);
      } catch (...) {
        parse_fail(path, lineno, "bad order");
      }
      if (order < 1) parse_fail(path, lineno, "order must be positive");
      id.reset();
      if (toks.size() >= 6 && toks[4] == "id") {
        auto comma = toks[5].find(',');
        if (comma == std::string::npos) parse_fail(path, lineno, "id must be a,b");
        try {
          id = std::make_pair(std::stoll(toks[5].substr(0, comma)),
                              std::stoll(toks[5].substr(comma + 1)));
        } catch (...) {
          parse_fail(path, lineno, "bad id");
        }
      }
      in_group = true;
      gens.clear();
    } else if (toks[0] == "gen") {
      if (!in_group) parse_fail(path, lineno, "gen outside group block");
      if (toks.size() < 2) parse_fail(path, lineno, "gen needs a point count");
      long long k = 0;
      try {
        k = std::stoll(toks[1]);
      } catch (...) {
        parse_fail(path, lineno, "bad point count");
      }
      if (k < 1 || k > 10000) parse_fail(path, lineno, "point count out of range");
      if (static_cast<long long>(toks.size()) != 2 + k)
        parse_fail(path, lineno, "expected " + std::to_string(k) + " images");
      std::vector<int> perm(k);
      for (long long i = 0; i < k; ++i) {
        try {
          perm[i] = std::stoi(toks[2 + i]);
        } catch (...) {
          parse_fail(path, lineno, "bad image");
        }
      }
      gens.push_back(std::move(perm));
    } else if (toks[0] == "end") {
      if (!in_group) parse_fail(path, lineno, "end outside group block");
      flush_group(lineno);
    } else {
      parse_fail(path, lineno, "unknown directive: " + toks[0]);
    }
  }
  if (in_group) parse_fail(path, lineno, "unterminated group block");

  for (long long n : orders_in_file) mark_complete(n);
  return added;
}

void Catalog::export_file(const std::vector<long long>& orders,
                          const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write catalog file: " + path);
  out << "# group catalog, one block per isomorphism class\n";
  for (const auto& e : entries_) {
    if (std::find(orders.begin(), orders.end(), e.order) == orders.end()) continue;
    out << "group " << e.name << " order " << e.order;
    if (e.external_id)
      out << " id " << e.external_id->first << "," << e.external_id->second;
    out << "\n";
    // regular representation: left multiplication by each generator
    for (Elt g : e.group.generators()) {
      out << "gen " << e.order;
      for (Elt x = 0; x < e.group.order(); ++x) out << " " << e.group.mul(g, x);
      out << "\n";
    }
    out << "end\n";
  }
}

}  // namespace trifold
