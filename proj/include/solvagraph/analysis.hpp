#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "solvagraph/nsgraph.hpp"

namespace solvagraph {

struct AnalysisOptions {
  RelationMode mode = RelationMode::Solvable;
  int threads = 1;
  std::uint64_t seed = 1;
  bool with_timings = false;
  bool deep_oracles = true;
};

// Everything the pipeline computes for one group: headline facts, per-class
// solvabilizer data, the S-group verdict, the graph summary, and every law
// check row. Failed rows are the falsification signal (exit code 3).
struct AnalysisReport {
  std::string label;
  long long order = 0;
  bool solvable = false;
  bool nilpotent = false;
  std::size_t radical_size = 0;
  int class_count = 0;
  RelationMode mode = RelationMode::Solvable;

  struct ClassEntry {
    int class_id = 0;
    std::string rep_label;
    int rep_order = 0;
    int class_size = 0;
    long long centralizer_order = 0;
    std::size_t sol_size = 0;
    bool is_subgroup = false;
    long long degree = 0;
  };
  std::vector<ClassEntry> solvabilizers;

  bool is_s_group = false;
  std::optional<std::array<std::string, 3>> sgroup_witness;  // a, b, x

  GraphReport graph;
  std::vector<CheckRow> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  int failed_checks() const;
  bool all_pass() const { return failed_checks() == 0; }
  std::vector<const CheckRow*> all_rows() const;
};

AnalysisReport analyze(const FiniteGroup& g, const AnalysisOptions& opts);

nlohmann::ordered_json report_json(const AnalysisReport& report, bool with_timings);
std::string report_text(const AnalysisReport& report);

// 0 when every check row passed, 3 otherwise (falsification signal).
int exit_code_for(const AnalysisReport& report);

}  // namespace solvagraph
