#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "casc/suites.hpp"

using json = nlohmann::ordered_json;
using namespace casc;

namespace {

constexpr int kSchemaVersion = 1;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CASC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("CASC_SEED", "not an unsigned integer");
    }
  }
  return 42;
}

json cascade_json(const RootSystem& rs, const CascadeTree& tree) {
  json arr = json::array();
  for (const CascadeNode& n : tree.nodes) {
    json node;
    node["coords"] = rs.roots[n.root_index];
    if (n.parent < 0)
      node["parent"] = nullptr;
    else
      node["parent"] = n.parent;
    node["depth"] = n.depth;
    arr.push_back(node);
  }
  return arr;
}

std::string coords_str(const Coords& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

struct TypeInfo {
  SimpleType type;
  RootSystem rs;
  CascadeTree tree;
  CascadeSet cs;
  bool minus_one;

  explicit TypeInfo(const SimpleType& t)
      : type(t),
        rs(make_root_system(t)),
        tree(compute_cascade(rs)),
        cs(CascadeSet::from_tree(tree)),
        minus_one(is_minus_identity(longest_element(rs))) {}

  bool open_orbit() const { return cs.m() == rs.rank(); }

  json header_json() const {
    json j;
    j["family"] = std::string(1, static_cast<char>(type.family));
    j["rank"] = type.rank;
    j["m"] = cs.m();
    j["ell"] = rs.rank();
    j["minus_one_in_weyl"] = minus_one;
    j["open_coadjoint_orbit"] = open_orbit();
    j["cascade"] = cascade_json(rs, tree);
    return j;
  }
};

json suites_json(const std::vector<TheoremReport>& reps) {
  json arr = json::array();
  for (const TheoremReport& r : reps) {
    json s;
    s["id"] = r.id;
    s["pass"] = r.pass;
    s["skipped"] = r.skipped;
    json dims;
    for (const auto& [k, v] : r.dims) dims[k] = v;
    s["dims"] = dims;
    arr.push_back(s);
  }
  return arr;
}

int cmd_cascade(const SimpleType& t, const std::string& format) {
  TypeInfo info(t);
  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "cascade";
    j.update(info.header_json());
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "type " << t.name() << "  ell=" << info.rs.rank()
            << "  m=" << info.cs.m()
            << "  open-orbit: " << (info.open_orbit() ? "yes" : "no") << "\n";
  std::cout << "cascade roots (simple-root coordinates):\n";
  for (std::size_t i = 0; i < info.tree.nodes.size(); ++i) {
    const CascadeNode& n = info.tree.nodes[i];
    std::cout << "  [" << i << "] depth " << n.depth << "  parent ";
    if (n.parent < 0)
      std::cout << "-";
    else
      std::cout << n.parent;
    std::cout << "  " << coords_str(info.rs.roots[n.root_index]) << "\n";
  }
  return 0;
}

int cmd_verify(const SimpleType& t, const SuiteConfig& cfg,
               const std::string& format) {
  TypeInfo info(t);
  auto reps = run_suites(t, cfg);
  bool all_pass = true;
  for (const TheoremReport& r : reps)
    if (!r.skipped && !r.pass) all_pass = false;
  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "verify";
    json input;
    input["suites"] = std::vector<std::string>(cfg.suites.begin(), cfg.suites.end());
    input["samples"] = cfg.samples;
    input["seed"] = cfg.seed;
    input["oracle_rank_limit"] = cfg.oracle_rank_limit;
    j["input"] = input;
    j.update(info.header_json());
    j["suites"] = suites_json(reps);
    j["all_pass"] = all_pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "type " << t.name() << "  ell=" << info.rs.rank()
              << "  m=" << info.cs.m() << "  seed=" << cfg.seed << "\n";
    for (const TheoremReport& r : reps) {
      std::cout << "  " << std::left << std::setw(36) << r.id
                << (r.skipped ? "SKIP" : (r.pass ? "pass" : "FAIL"));
      for (const auto& [k, v] : r.dims) std::cout << "  " << k << "=" << v;
      std::cout << "\n";
    }
    std::cout << (all_pass ? "all suites passed" : "VERIFICATION FAILED") << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_classify(int max_rank, const std::string& format) {
  auto rows = classify(max_rank);
  bool consistent = true;
  for (const ClassRow& r : rows)
    if (r.minus_one_in_weyl != r.open_coadjoint_orbit) consistent = false;
  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "classify";
    j["input"]["max_rank"] = max_rank;
    json arr = json::array();
    for (const ClassRow& r : rows) {
      json row;
      row["family"] = std::string(1, static_cast<char>(r.type.family));
      row["rank"] = r.type.rank;
      row["m"] = r.m;
      row["ell"] = r.ell;
      row["minus_one_in_weyl"] = r.minus_one_in_weyl;
      row["open_coadjoint_orbit"] = r.open_coadjoint_orbit;
      arr.push_back(row);
    }
    j["rows"] = arr;
    j["consistent"] = consistent;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(6) << "type" << std::right
              << std::setw(5) << "ell" << std::setw(5) << "m" << std::setw(8)
              << "-1inW" << std::setw(12) << "open-orbit" << "\n";
    for (const ClassRow& r : rows) {
      std::cout << std::left << std::setw(6) << r.type.name() << std::right
                << std::setw(5) << r.ell << std::setw(5) << r.m << std::setw(8)
                << (r.minus_one_in_weyl ? "yes" : "no") << std::setw(12)
                << (r.open_coadjoint_orbit ? "yes" : "no") << "\n";
    }
    std::cout << "note: C2 omitted (isomorphic to B2)\n";
  }
  return consistent ? 0 : 1;
}

int cmd_algebra_info(const SimpleType& t, const std::string& format) {
  RootSystem rs = make_root_system(t);
  LieAlgebra g = build_algebra(rs);
  int max_n = 0;
  for (std::size_t a = 0; a < rs.roots.size(); ++a)
    for (std::size_t b = 0; b < rs.roots.size(); ++b)
      max_n = std::max(max_n,
                       std::abs(g.structure_constant(static_cast<int>(a),
                                                     static_cast<int>(b))));
  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "algebra-info";
    j["family"] = std::string(1, static_cast<char>(t.family));
    j["rank"] = t.rank;
    j["dim"] = g.dim();
    j["n_roots"] = rs.roots.size();
    j["n_positive"] = rs.n_positive;
    j["max_structure_constant"] = max_n;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "type " << t.name() << "  dim=" << g.dim()
              << "  roots=" << rs.roots.size()
              << "  positive=" << rs.n_positive
              << "  max|N|=" << max_n << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cascade and coadjoint-orbit toolkit for simple Lie algebras"};
  app.require_subcommand(1);

  std::string family_s, format = "text";
  int rank_v = 0, max_rank = 8;
  SuiteConfig cfg;
  std::vector<std::string> suite_args;
  std::uint64_t seed_flag = 0;
  bool seed_given = false;

  auto add_type_opts = [&](CLI::App* c) {
    c->add_option("--type", family_s, "family letter A..G")->required();
    c->add_option("--rank", rank_v, "rank")->required();
    c->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* casc_cmd = app.add_subcommand("cascade", "print the cascade of strongly orthogonal roots");
  add_type_opts(casc_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run verifier suites");
  add_type_opts(verify_cmd);
  verify_cmd->add_option("--suite", suite_args,
                         "suites: cascade w0 isotropy codim shift fixed transitivity all")
      ->delimiter(',');
  verify_cmd->add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed_flag, "RNG seed")->each([&](const std::string&) { seed_given = true; });
  verify_cmd->add_option("--oracle-rank-limit", cfg.oracle_rank_limit,
                         "max rank for the brute-force oracle");

  CLI::App* classify_cmd = app.add_subcommand("classify", "classification table over all simple types");
  classify_cmd->add_option("--max-rank", max_rank, "maximum rank")->check(CLI::Range(2, 64));
  classify_cmd->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* info_cmd = app.add_subcommand("algebra-info", "dimensions and structure-constant summary");
  add_type_opts(info_cmd);

  try {
    app.parse(argc, argv);

    if (classify_cmd->parsed()) return cmd_classify(max_rank, format);

    SimpleType t{parse_family(family_s), rank_v};
    t.validate();
    if (casc_cmd->parsed()) return cmd_cascade(t, format);
    if (info_cmd->parsed()) return cmd_algebra_info(t, format);

    // verify
    cfg.seed = seed_given ? seed_flag : default_seed();
    if (!suite_args.empty()) {
      cfg.suites.clear();
      for (const std::string& s : suite_args) {
        if (!valid_suite_selector(s))
          throw CLI::ValidationError("--suite", "unknown suite '" + s + "'");
        cfg.suites.insert(s);
      }
    }
    return cmd_verify(t, cfg, format);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
