#include "solvagraph/analysis.hpp"

#include <chrono>
#include <sstream>

namespace solvagraph {

namespace {

class PhaseTimer {
 public:
  explicit PhaseTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
  template <class F>
  auto run(const std::string& name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(name, t0);
    } else {
      auto r = f();
      record(name, t0);
      return r;
    }
  }

 private:
  void record(const std::string& name, std::chrono::steady_clock::time_point t0) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    sink_.emplace_back(name, ms);
  }
  std::vector<std::pair<std::string, double>>& sink_;
};

}  // namespace

int AnalysisReport::failed_checks() const {
  int n = 0;
  for (const auto* row : all_rows())
    if (!row->pass) ++n;
  return n;
}

std::vector<const CheckRow*> AnalysisReport::all_rows() const {
  std::vector<const CheckRow*> rows;
  for (const auto& r : checks) rows.push_back(&r);
  for (const auto& r : graph.rows) rows.push_back(&r);
  return rows;
}

AnalysisReport analyze(const FiniteGroup& g, const AnalysisOptions& opts) {
  AnalysisReport rep;
  PhaseTimer timer(rep.timings_ms);
  rep.label = g.label();
  rep.order = g.order();
  rep.mode = opts.mode;
  rep.class_count = g.classes().count();

  SolvabilizerEngine engine(g, opts.threads);
  timer.run("relation_sweep", [&] {
    engine.ensure_all_rows(RelationMode::Solvable);
    engine.ensure_all_rows(RelationMode::Nilpotent);
  });

  timer.run("group_facts", [&] {
    rep.solvable = is_solvable(g.full_set());
    rep.nilpotent = is_nilpotent(g.full_set());
    rep.radical_size = engine.radical(opts.mode).count();
  });

  timer.run("solvabilizers", [&] {
    for (int c = 0; c < g.classes().count(); ++c) {
      int r = g.classes().representatives[c];
      AnalysisReport::ClassEntry e;
      e.class_id = c;
      e.rep_label = g.element_label(r);
      e.rep_order = g.element_order(r);
      e.class_size = g.classes().class_sizes[c];
      e.centralizer_order = g.classes().centralizer_orders[c];
      e.sol_size = engine.row(r, opts.mode).count();
      e.is_subgroup = engine.class_row_is_subgroup(c, opts.mode);
      e.degree = g.order() - static_cast<long long>(e.sol_size);
      rep.solvabilizers.push_back(std::move(e));
    }
  });

  timer.run("s_group", [&] {
    SGroupReport sg = engine.s_group(opts.mode);
    rep.is_s_group = sg.is_s_group;
    if (sg.witness)
      rep.sgroup_witness = {g.element_label(sg.witness->a), g.element_label(sg.witness->b),
                            g.element_label(sg.witness->x)};
  });

  CheckOptions copts;
  copts.seed = opts.seed;
  copts.deep_oracles = opts.deep_oracles;
  rep.graph = timer.run("graph", [&] { return graph_report(engine, opts.mode, copts); });
  rep.checks = timer.run("law_checks", [&] { return relation_law_checks(engine, copts); });
  return rep;
}

nlohmann::ordered_json report_json(const AnalysisReport& rep, bool with_timings) {
  nlohmann::ordered_json j;
  j["group"] = {{"label", rep.label},
                {"order", rep.order},
                {"is_solvable", rep.solvable},
                {"is_nilpotent", rep.nilpotent},
                {"radical_size", rep.radical_size},
                {"class_count", rep.class_count}};
  j["mode"] = mode_name(rep.mode);
  j["solvabilizers"] = nlohmann::ordered_json::array();
  for (const auto& e : rep.solvabilizers)
    j["solvabilizers"].push_back({{"class", e.class_id},
                                  {"rep_label", e.rep_label},
                                  {"rep_order", e.rep_order},
                                  {"class_size", e.class_size},
                                  {"centralizer_order", e.centralizer_order},
                                  {"sol_size", e.sol_size},
                                  {"is_subgroup", e.is_subgroup},
                                  {"degree", e.degree}});
  j["s_group"] = {{"is_s_group", rep.is_s_group}};
  if (rep.sgroup_witness)
    j["s_group"]["witness"] = {{"a", (*rep.sgroup_witness)[0]},
                               {"b", (*rep.sgroup_witness)[1]},
                               {"x", (*rep.sgroup_witness)[2]}};
  else
    j["s_group"]["witness"] = nullptr;

  nlohmann::ordered_json graph;
  graph["vertices"] = rep.graph.vertex_count;
  graph["edges"] = rep.graph.edge_count;
  graph["min_degree"] = rep.graph.min_degree;
  graph["max_degree"] = rep.graph.max_degree;
  graph["distinct_degrees"] = rep.graph.distinct_degree_count;
  graph["full_distinct_degrees"] = rep.graph.full_distinct_degree_count;
  if (rep.graph.diam)
    graph["diameter"] = *rep.graph.diam;
  else
    graph["diameter"] = nullptr;
  if (rep.graph.k44) {
    graph["k44"] = {{"U", nlohmann::ordered_json::array()},
                    {"V", nlohmann::ordered_json::array()},
                    {"constructive", rep.graph.k44->constructive}};
    for (int i = 0; i < 4; ++i) {
      graph["k44"]["U"].push_back(rep.graph.k44->left[i]);
      graph["k44"]["V"].push_back(rep.graph.k44->right[i]);
    }
  } else {
    graph["k44"] = nullptr;
  }
  graph["checks"] = nlohmann::ordered_json::array();
  for (const auto& row : rep.graph.rows)
    graph["checks"].push_back(
        {{"name", row.name}, {"status", row.pass ? "pass" : "fail"}, {"detail", row.detail}});
  j["graph"] = std::move(graph);

  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& row : rep.checks)
    j["checks"].push_back(
        {{"name", row.name}, {"status", row.pass ? "pass" : "fail"}, {"detail", row.detail}});

  if (with_timings) {
    nlohmann::ordered_json t;
    for (const auto& [name, ms] : rep.timings_ms) t[name] = ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

std::string report_text(const AnalysisReport& rep) {
  std::ostringstream out;
  out << "group " << rep.label << " (order " << rep.order << ")\n";
  out << "  solvable: " << (rep.solvable ? "yes" : "no")
      << "   nilpotent: " << (rep.nilpotent ? "yes" : "no") << "   radical size: " << rep.radical_size
      << "   classes: " << rep.class_count << "\n";
  out << "mode: " << mode_name(rep.mode) << "\n";
  out << "solvabilizers by class:\n";
  for (const auto& e : rep.solvabilizers)
    out << "  class " << e.class_id << ": rep " << e.rep_label << "  order " << e.rep_order
        << "  size " << e.class_size << "  |C|=" << e.centralizer_order << "  |sol|=" << e.sol_size
        << "  subgroup=" << (e.is_subgroup ? "yes" : "no") << "  degree=" << e.degree << "\n";
  out << "s-group: " << (rep.is_s_group ? "yes" : "no");
  if (rep.sgroup_witness)
    out << "  witness: a=" << (*rep.sgroup_witness)[0] << " b=" << (*rep.sgroup_witness)[1]
        << " x=" << (*rep.sgroup_witness)[2];
  out << "\n";
  out << "graph (induced, " << mode_name(rep.mode) << "): " << rep.graph.vertex_count
      << " vertices, " << rep.graph.edge_count << " edges";
  if (rep.graph.vertex_count) {
    out << ", degrees " << rep.graph.min_degree << ".." << rep.graph.max_degree << " ("
        << rep.graph.distinct_degree_count << " distinct)";
    if (rep.graph.diam) out << ", diameter " << *rep.graph.diam;
  }
  out << "\n";
  int failed = rep.failed_checks();
  auto rows = rep.all_rows();
  out << "checks: " << (rows.size() - failed) << "/" << rows.size() << " passed\n";
  for (const auto* row : rows) {
    out << "  [" << (row->pass ? "PASS" : "FAIL") << "] " << row->name;
    if (!row->detail.empty()) out << "  (" << row->detail << ")";
    out << "\n";
  }
  for (const auto& [name, ms] : rep.timings_ms) out << "timing " << name << ": " << ms << " ms\n";
  return out.str();
}

int exit_code_for(const AnalysisReport& report) { return report.all_pass() ? 0 : 3; }

}  // namespace solvagraph
