#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "asf/asf.hpp"

namespace {

using asf::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

std::string lie_text(const asf::LieElt& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += asf::rat_str(c);
    out += k >= 0 ? " e[" + std::to_string(k) + "]" : " h[" + std::to_string(-1 - k) + "]";
  }
  return out;
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_info(const std::string& type_str, bool as_json, int cap) {
  asf::RootSystem rs = asf::build(asf::CartanType::parse(type_str));
  asf::Int order = asf::weyl_order_from_heights(rs);
  json j{{"dimension", rs.num_roots() + rs.rank()},
         {"max_height", rs.max_height()},
         {"positive_roots", rs.nu()},
         {"rank", rs.rank()},
         {"type", rs.type().str()},
         {"weyl_enumerable", order <= cap},
         {"weyl_order", order.str()}};
  std::ostringstream t;
  t << "type:           " << rs.type().str() << "\n"
    << "rank:           " << rs.rank() << "\n"
    << "positive roots: " << rs.nu() << "\n"
    << "max height:     " << rs.max_height() << "\n"
    << "dimension:      " << rs.num_roots() + rs.rank() << "\n"
    << "weyl order:     " << order.str() << "\n";
  emit(j, as_json, t.str());
  return kExitOk;
}

int cmd_solve(const std::string& type_str, const std::string& in_path, bool as_json) {
  asf::RootSystem rs = asf::build(asf::CartanType::parse(type_str));
  json input;
  try {
    if (in_path.empty() || in_path == "-") {
      input = json::parse(std::cin);
    } else {
      std::ifstream f(in_path);
      if (!f) throw std::invalid_argument("cannot open input file: " + in_path);
      input = json::parse(f);
    }
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
  }
  asf::SolveInput in = asf::solve_input_from_json(rs, input);
  asf::StructureTable st(rs);
  json out = asf::solve_output_to_json(st, in);

  std::ostringstream t;
  t << "E_1..E_" << rs.max_height() << ":\n";
  for (const json& e : out["E_seq"]) t << "  " << lie_text(asf::lie_from_json(rs, e)) << "\n";
  t << "leading term: " << lie_text(asf::lie_from_json(rs, out["leading_term"])) << "\n"
    << "omega check:  " << (out["omega_check"].get<bool>() ? "true" : "false") << "\n";
  emit(out, as_json, t.str());
  return out["omega_check"].get<bool>() ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const std::string& type_str, int trials, std::uint64_t seed, int h_range,
               int den_bound, bool as_json) {
  asf::VerifyConfig cfg;
  cfg.type = asf::CartanType::parse(type_str);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.h_range = h_range;
  cfg.coeff_den_bound = den_bound;
  asf::VerifyResult res = asf::run_verify(cfg);
  std::ostringstream t;
  t << (res.pass ? "PASS" : "FAIL") << " (" << cfg.type.str() << ", " << trials
    << " trials, seed " << seed << ")\n";
  for (const json& f : res.report["failures"]) t << "failed: " << f.dump() << "\n";
  emit(res.report, as_json, t.str());
  return res.pass ? kExitOk : kExitCheckFailed;
}

int cmd_census(const std::string& type_str, int cap, bool as_json) {
  asf::RootSystem rs = asf::build(asf::CartanType::parse(type_str));
  std::vector<asf::CellReport> reports = asf::cell_census(rs, cap);
  json j = json::array();
  std::ostringstream t;
  t << "w\tlength\tfibre_dim\n";
  for (const asf::CellReport& r : reports) {
    j.push_back(json{{"fibre_dim", r.fibre_dim}, {"length", r.length}, {"w", r.w.word_str()}});
    t << r.w.word_str() << "\t" << r.length << "\t" << r.fibre_dim << "\n";
  }
  t << "total: " << reports.size() << "\n";
  emit(j, as_json, t.str());
  return kExitOk;
}

int cmd_components(const std::string& type_str, int box, int cap, bool as_json) {
  asf::RootSystem rs = asf::build(asf::CartanType::parse(type_str));
  std::vector<asf::WeylElem> ws = asf::weyl_enumerate(rs, cap);
  std::vector<asf::CellLabel> labels = asf::label_box(rs, ws, box);
  int orbits = asf::component_orbits(labels);
  json j{{"box", box},
         {"labels", labels.size()},
         {"orbits", orbits},
         {"type", rs.type().str()}};
  std::ostringstream t;
  t << "labels: " << labels.size() << "\norbits: " << orbits << "\n";
  emit(j, as_json, t.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and census tools for nilpotent conjugation domains"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string type_str;
  int cap = 10000;

  CLI::App* info = app.add_subcommand("info", "Root system and Weyl group summary");
  info->add_option("type", type_str, "Cartan type, e.g. A2")->required();
  info->add_option("--cap", cap, "Weyl enumeration cap");

  std::string in_path;
  CLI::App* solve = app.add_subcommand("solve", "Solve the correction recursion for (h, E)");
  solve->add_option("type", type_str, "Cartan type")->required();
  solve->add_option("--in", in_path, "Input JSON file (default: stdin)");

  int trials = 50;
  std::uint64_t seed = 1;
  int h_range = 9;
  int den_bound = 6;
  CLI::App* verify = app.add_subcommand("verify", "Run the seeded verification suite");
  verify->add_option("type", type_str, "Cartan type")->required();
  verify->add_option("--trials", trials, "Number of random trials");
  verify->add_option("--seed", seed, "Base seed");
  verify->add_option("--h-range", h_range, "Bound for random h entries");
  verify->add_option("--den-bound", den_bound, "Bound for random E coefficients");

  CLI::App* census = app.add_subcommand("census", "Per-cell length and fibre dimensions");
  census->add_option("type", type_str, "Cartan type")->required();
  census->add_option("--cap", cap, "Weyl enumeration cap");

  int box = 1;
  CLI::App* components = app.add_subcommand("components", "Component labels over a box");
  components->add_option("type", type_str, "Cartan type")->required();
  components->add_option("--box", box, "Box radius for translations")->required();
  components->add_option("--cap", cap, "Weyl enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  }
  bool as_json = format == "json";

  try {
    if (*info) return cmd_info(type_str, as_json, cap);
    if (*solve) return cmd_solve(type_str, in_path, as_json);
    if (*verify) return cmd_verify(type_str, trials, seed, h_range, den_bound, as_json);
    if (*census) return cmd_census(type_str, cap, as_json);
    if (*components) return cmd_components(type_str, box, cap, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const asf::group_too_large& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitBadInput;
}
