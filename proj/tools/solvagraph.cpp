#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "solvagraph/analysis.hpp"
#include "solvagraph/catalog.hpp"
#include "solvagraph/errors.hpp"
#include "solvagraph/parallel.hpp"

namespace {

using namespace solvagraph;

int resolve_cap(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("SOLVAGRAPH_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return kDefaultOrderCap;
}

RelationMode parse_mode(const std::string& m) {
  if (m == "solvable") return RelationMode::Solvable;
  if (m == "nilpotent") return RelationMode::Nilpotent;
  throw BadParams("mode must be 'solvable' or 'nilpotent'");
}

struct CommonFlags {
  std::string mode = "solvable";
  int threads = default_thread_count();
  std::uint64_t seed = 1;
  int max_order = 0;  // 0 = env/default
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--mode", f.mode, "relation mode: solvable|nilpotent")
      ->check(CLI::IsMember({"solvable", "nilpotent"}));
  cmd->add_option("--threads", f.threads, "worker threads for the pair sweeps");
  cmd->add_option("--seed", f.seed, "seed for sampled checks");
  cmd->add_option("--max-order", f.max_order, "closure cap (overrides SOLVAGRAPH_MAX_ORDER)");
}

int run_analyze(const std::string& spec, const CommonFlags& f, bool json, bool timings) {
  FiniteGroup g = build_group(spec, resolve_cap(f.max_order));
  AnalysisOptions opts;
  opts.mode = parse_mode(f.mode);
  opts.threads = f.threads;
  opts.seed = f.seed;
  AnalysisReport rep = analyze(g, opts);
  if (json)
    std::cout << report_json(rep, timings).dump(2) << "\n";
  else
    std::cout << report_text(rep);
  return exit_code_for(rep);
}

int run_verify(const std::string& spec, bool catalog_all, const CommonFlags& f, int max_order) {
  std::vector<std::string> targets;
  if (catalog_all) {
    for (const auto& e : builtin_catalog())
      if (e.order <= max_order) targets.push_back(e.spec);
  } else {
    targets.push_back(spec);
  }
  int cap = resolve_cap(f.max_order);
  long long total = 0, failed = 0;
  for (const auto& t : targets) {
    FiniteGroup g = build_group(t, cap);
    AnalysisOptions opts;
    opts.mode = parse_mode(f.mode);
    opts.threads = f.threads;
    opts.seed = f.seed;
    AnalysisReport rep = analyze(g, opts);
    for (const auto* row : rep.all_rows()) {
      ++total;
      if (!row->pass) ++failed;
      std::cout << g.label() << "  " << row->name << "  " << (row->pass ? "PASS" : "FAIL");
      if (!row->pass && !row->detail.empty()) std::cout << "  " << row->detail;
      std::cout << "\n";
    }
  }
  std::cout << "TOTAL: " << targets.size() << " group(s), " << total << " checks, " << failed
            << " failure(s)\n";
  return failed == 0 ? 0 : 3;
}

int run_graph(const std::string& spec, const CommonFlags& f, const std::string& format,
              bool full) {
  FiniteGroup g = build_group(spec, resolve_cap(f.max_order));
  SolvabilizerEngine engine(g, f.threads);
  NonSolvableGraph graph = build_graph(engine, parse_mode(f.mode), !full);
  std::cout << export_graph(graph, format);
  return 0;
}

int run_sol(const std::string& spec, const std::string& element, const CommonFlags& f,
            bool list) {
  FiniteGroup g = build_group(spec, resolve_cap(f.max_order));
  int x = parse_element(g, element);
  SolvabilizerEngine engine(g, f.threads);
  SolvabilizerResult res = engine.sol_of_element(x, parse_mode(f.mode));
  std::cout << "group: " << g.label() << " (order " << g.order() << ")\n";
  std::cout << "element: " << g.element_label(x) << "  order " << g.element_order(x) << "\n";
  std::cout << "size: " << res.size << "\n";
  std::cout << "subgroup: " << (res.is_subgroup ? "yes" : "no") << "\n";
  if (list) {
    std::cout << "members:\n";
    res.set.bits.for_each([&](int i) { std::cout << "  " << i << ": " << g.element_label(i) << "\n"; });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvabilizers, radicals, S-group testing and relation graphs of finite groups"};
  app.require_subcommand(1);

  CommonFlags fa, fv, fg, fs;
  std::string spec_a, spec_v, spec_g, spec_s, element_s;
  bool json = false, timings = false, catalog_all = false, full = false, list = false;
  int verify_max_order = 720;
  std::string format = "dot";

  auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline report for one group");
  analyze_cmd->add_option("spec", spec_a, "group spec")->required();
  analyze_cmd->add_flag("--json", json, "emit the report as JSON");
  analyze_cmd->add_flag("--timings", timings, "include per-phase timings in JSON output");
  add_common(analyze_cmd, fa);

  auto* verify_cmd = app.add_subcommand("verify", "run every law check, one row per statement");
  verify_cmd->add_option("spec", spec_v, "group spec");
  verify_cmd->add_flag("--catalog-all", catalog_all, "verify every built-in catalog group");
  verify_cmd->add_option("--max-order", verify_max_order,
                         "order bound for --catalog-all (default 720)");
  verify_cmd->add_option("--mode", fv.mode, "relation mode: solvable|nilpotent")
      ->check(CLI::IsMember({"solvable", "nilpotent"}));
  verify_cmd->add_option("--threads", fv.threads, "worker threads for the pair sweeps");
  verify_cmd->add_option("--seed", fv.seed, "seed for sampled checks");

  auto* graph_cmd = app.add_subcommand("graph", "export the relation graph");
  graph_cmd->add_option("spec", spec_g, "group spec")->required();
  graph_cmd->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
  bool induced_flag = false;
  auto* full_opt = graph_cmd->add_flag("--full", full, "keep radical (isolated) vertices");
  graph_cmd->add_flag("--induced", induced_flag, "drop radical vertices (the default)")
      ->excludes(full_opt);
  add_common(graph_cmd, fg);

  auto* sol_cmd = app.add_subcommand("sol", "solvabilizer of one element");
  sol_cmd->add_option("spec", spec_s, "group spec")->required();
  sol_cmd->add_option("element", element_s, "element in the group's notation")->required();
  sol_cmd->add_flag("--list", list, "list the member elements");
  add_common(sol_cmd, fs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(analyze_cmd)) return run_analyze(spec_a, fa, json, timings);
    if (app.got_subcommand(verify_cmd)) {
      if (!catalog_all && spec_v.empty()) {
        std::cerr << "verify needs a spec or --catalog-all\n";
        return 1;
      }
      return run_verify(spec_v, catalog_all, fv, verify_max_order);
    }
    if (app.got_subcommand(graph_cmd)) return run_graph(spec_g, fg, format, full);
    if (app.got_subcommand(sol_cmd)) return run_sol(spec_s, element_s, fs, list);
  } catch (const solvagraph::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const solvagraph::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
