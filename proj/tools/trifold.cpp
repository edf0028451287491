#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "trifold/datum_file.hpp"
#include "trifold/pipeline.hpp"

using namespace trifold;
using nlohmann::json;

namespace {

struct CommonOpts {
  long long chi = -1;
  std::string case_name = "all";
  long long min_order = 1;
  long long max_order = 100000;
  std::vector<std::string> catalog_paths;
  std::string nmax_path;
  std::string format = "tsv";
  int jobs = 1;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_chi) {
  if (with_chi)
    cmd->add_option("--chi", o.chi, "holomorphic Euler characteristic (<= -1)");
  cmd->add_option("--case", o.case_name,
                  "index2|index3|index6|all (classification cases)");
  cmd->add_option("--min-order", o.min_order, "smallest group order to consider");
  cmd->add_option("--max-order", o.max_order, "largest group order to consider");
  cmd->add_option("--catalog", o.catalog_paths, "group catalog file(s) to import");
  cmd->add_option("--nmax", o.nmax_path, "per-genus maximum order table");
  cmd->add_option("--format", o.format, "tsv|json");
  cmd->add_option("--jobs", o.jobs, "worker threads");
  cmd->add_option("--out", o.out_path, "output path (stdout when omitted)");
}

std::vector<MixedCase> cases_from(const std::string& name) {
  if (name == "all")
    return {MixedCase::index2, MixedCase::index3, MixedCase::index6};
  if (name == "unmixed")
    throw Error("unmixed actions are verified through 'hodge' with a datum file");
  auto c = parse_mixed_case(name);
  if (!c) throw Error("unknown case: " + name);
  return {*c};
}

Catalog load_catalog(const CommonOpts& o, std::ostream& log) {
  Catalog cat = Catalog::with_builtins();
  std::vector<std::string> paths = o.catalog_paths;
  if (const char* dir = std::getenv("TRIFOLD_CATALOG_DIR")) {
    std::error_code ec;
    std::vector<std::string> env_paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
      if (entry.path().extension() == ".cat") env_paths.push_back(entry.path().string());
    std::sort(env_paths.begin(), env_paths.end());
    paths.insert(paths.end(), env_paths.begin(), env_paths.end());
  }
  for (const auto& p : paths) {
    std::vector<std::string> warnings;
    size_t added = cat.import_file(p, &warnings);
    log << "# imported " << added << " group(s) from " << p << "\n";
    for (const auto& w : warnings) log << "# warning: " << w << "\n";
  }
  return cat;
}

NmaxTable load_nmax(const CommonOpts& o) {
  if (o.nmax_path.empty()) return NmaxTable::hurwitz_only();
  return NmaxTable::load(o.nmax_path);
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw Error("cannot open output file: " + path);
      os = &file;
    }
  }
  std::ostream& stream() { return *os; }
};

// ------------------------------------------------------------------ numdata

int cmd_numdata(const CommonOpts& o) {
  auto nmax = load_nmax(o);
  Output out(o.out_path);
  json jroot = {{"command", "numdata"}, {"chi", o.chi}, {"cases", json::array()}};

  for (MixedCase c : cases_from(o.case_name)) {
    auto data = admissible_numerical_data(o.chi, c, nmax);
    std::erase_if(data, [&](const NumericalDatum& d) {
      return d.n < o.min_order || d.n > o.max_order;
    });
    std::set<long long> orders;
    long long n_max_seen = 0;
    for (const auto& d : data) {
      orders.insert(d.n);
      n_max_seen = std::max(n_max_seen, d.n);
    }
    const long long n_theo = max_group_order(o.chi, c);

    if (o.format == "json") {
      json jcase = {{"case", to_string(c)},
                    {"summary",
                     {{"AdNumData", data.size()},
                      {"G-Orders", orders.size()},
                      {"n_max", n_max_seen},
                      {"n_theo", n_theo}}},
                    {"data", json::array()}};
      for (const auto& d : data)
        jcase["data"].push_back({{"n", d.n},
                                 {"t1", d.t1.str()},
                                 {"t2", d.t2 ? d.t2->str() : "-"},
                                 {"g1", d.g1},
                                 {"g2", d.g2}});
      jroot["cases"].push_back(std::move(jcase));
    } else {
      out.stream() << "# case\tn\tt1\tt2\tg1\tg2\n";
      for (const auto& d : data)
        out.stream() << to_string(c) << "\t" << d.n << "\t" << d.t1.str() << "\t"
                     << (d.t2 ? d.t2->str() : "-") << "\t" << d.g1 << "\t" << d.g2
                     << "\n";
      out.stream() << "# " << to_string(c) << "\tAdNumData\t" << data.size()
                   << "\tG-Orders\t" << orders.size() << "\tn_max\t" << n_max_seen
                   << "\tn_theo\t" << n_theo << "\n";
    }
  }
  if (o.format == "json") out.stream() << jroot.dump(2) << "\n";
  return 0;
}

// ----------------------------------------------------------------- classify

int cmd_classify(const CommonOpts& o) {
  auto cat = load_catalog(o, std::cerr);
  auto nmax = load_nmax(o);
  Output out(o.out_path);

  std::vector<ClassifiedRow> rows;
  std::vector<std::pair<std::string, long long>> unresolved;
  for (MixedCase c : cases_from(o.case_name)) {
    auto result = classify(o.chi, c, o.min_order, o.max_order, cat, nmax, o.jobs);
    for (auto& r : result.rows) rows.push_back(std::move(r));
    for (long long n : result.unresolved_orders)
      unresolved.emplace_back(to_string(c), n);
  }

  if (o.format == "json") {
    json jroot = {{"command", "classify"},
                  {"chi", o.chi},
                  {"rows", json::array()},
                  {"unresolved_orders", json::array()}};
    for (const auto& r : rows)
      jroot["rows"].push_back({{"case", to_string(r.mixed_case)},
                               {"group", r.group_name},
                               {"id", r.external_id},
                               {"order", r.order},
                               {"t1", r.t1.str()},
                               {"t2", r.t2 ? r.t2->str() : "-"},
                               {"h30", r.diamond.h30},
                               {"h20", r.diamond.h20},
                               {"h10", r.diamond.h10},
                               {"h11", r.diamond.h11},
                               {"h12", r.diamond.h12},
                               {"d", r.d},
                               {"witnesses", r.witnesses}});
    for (const auto& [cname, n] : unresolved)
      jroot["unresolved_orders"].push_back({{"case", cname}, {"order", n}});
    out.stream() << jroot.dump(2) << "\n";
  } else {
    out.stream()
        << "# case\tgroup\tid\torder\tt1\tt2\th30\th20\th10\th11\th12\td\twitnesses\n";
    for (const auto& r : rows)
      out.stream() << to_string(r.mixed_case) << "\t" << r.group_name << "\t"
                   << r.external_id << "\t" << r.order << "\t" << r.t1.str() << "\t"
                   << (r.t2 ? r.t2->str() : "-") << "\t" << r.diamond.h30 << "\t"
                   << r.diamond.h20 << "\t" << r.diamond.h10 << "\t" << r.diamond.h11
                   << "\t" << r.diamond.h12 << "\t" << r.d << "\t" << r.witnesses
                   << "\n";
  }

  if (!unresolved.empty()) {
    if (!o.out_path.empty()) {
      std::ofstream side(o.out_path + ".unresolved");
      for (const auto& [cname, n] : unresolved) side << cname << "\t" << n << "\n";
    }
    for (const auto& [cname, n] : unresolved)
      std::cerr << "unresolved order (no complete catalog): " << cname << " " << n
                << "\n";
    return 2;
  }
  return 0;
}

// -------------------------------------------------------------------- hodge

int cmd_hodge(const CommonOpts& o, const std::string& datum_path) {
  auto file = parse_datum_file(datum_path);
  auto v = verify_datum(file);
  Output out(o.out_path);
  const char* kind_name =
      file.kind == DatumFile::Kind::unmixed  ? "unmixed"
      : file.kind == DatumFile::Kind::index2 ? "index2"
      : file.kind == DatumFile::Kind::index3 ? "index3"
                                             : "index6";
  if (o.format == "json") {
    json j = {{"command", "hodge"},
              {"case", kind_name},
              {"group", file.group_name},
              {"order", file.G.order()},
              {"genera", v.genera},
              {"free", v.free}};
    if (v.free) {
      j["hodge"] = {{"h30", v.diamond.h30},
                    {"h20", v.diamond.h20},
                    {"h10", v.diamond.h10},
                    {"h11", v.diamond.h11},
                    {"h12", v.diamond.h12}};
      j["chern"] = {{"chi", v.chern.chi}, {"e", v.chern.euler}, {"K3", v.chern.k_cubed}};
    }
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream() << "case: " << kind_name << "\n"
                 << "group: " << file.group_name << " (order " << file.G.order()
                 << ")\n";
    out.stream() << "genera:";
    for (long long g : v.genera) out.stream() << " " << g;
    out.stream() << "\n";
    out.stream() << "free: " << (v.free ? "yes" : "no") << "\n";
    if (v.free) {
      out.stream() << "hodge: " << v.diamond.str() << "\n";
      out.stream() << "chern: chi=" << v.chern.chi << " e=" << v.chern.euler
                   << " K3=" << v.chern.k_cubed << "\n";
    }
  }
  return 0;
}

// -------------------------------------------------------------------- group

void describe_group(const GroupTable& g, const std::string& label,
                    const Catalog& cat, std::ostream& os) {
  os << "name: " << label << "\n";
  os << "order: " << g.order() << "\n";
  os << "classes:";
  for (int c = 0; c < g.num_classes(); ++c)
    os << " " << g.class_size(c) << "(ord" << g.element_order(g.class_rep(c)) << ")";
  os << "\n";
  auto table = character_table(g);
  os << "character degrees:";
  for (long long d : table.degrees) os << " " << d;
  os << "\n";
  const auto* e = cat.identify(g);
  if (e)
    os << "identified: " << e->name << " id " << e->id_str() << "\n";
  else
    os << "identified: -\n";
}

int cmd_group(const CommonOpts& o, const std::string& what) {
  auto cat = load_catalog(o, std::cerr);
  Output out(o.out_path);
  if (std::filesystem::exists(what)) {
    Catalog scratch;
    scratch.import_file(what);
    for (const auto& e : scratch.all()) {
      describe_group(e.group, e.name, cat, out.stream());
      out.stream() << "\n";
    }
    return 0;
  }
  for (const auto& e : cat.all()) {
    if (e.name == what) {
      describe_group(e.group, e.name, cat, out.stream());
      return 0;
    }
  }
  std::cerr << "no catalog group named '" << what << "'\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification of threefolds isogenous to a product of mixed type"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string datum_path, group_what;

  auto* numdata = app.add_subcommand("numdata", "enumerate admissible numerical data");
  add_common(numdata, o, true);
  auto* classify_cmd =
      app.add_subcommand("classify", "run the full classification search");
  add_common(classify_cmd, o, true);
  auto* hodge = app.add_subcommand("hodge", "verify an algebraic datum file");
  add_common(hodge, o, false);
  hodge->add_option("datum", datum_path, "algebraic datum file")->required();
  auto* group = app.add_subcommand("group", "describe a group by name or file");
  add_common(group, o, false);
  group->add_option("name", group_what, "catalog name or group file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(numdata)) {
      if (o.chi > -1) throw Error("classification commands need --chi <= -1");
      return cmd_numdata(o);
    }
    if (app.got_subcommand(classify_cmd)) {
      if (o.chi > -1) throw Error("classification commands need --chi <= -1");
      return cmd_classify(o);
    }
    if (app.got_subcommand(hodge)) return cmd_hodge(o, datum_path);
    if (app.got_subcommand(group)) return cmd_group(o, group_what);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
