// Acceptance suite: one line per criterion, wall-clock limits enforced.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "solvagraph/analysis.hpp"
#include "solvagraph/catalog.hpp"
#include "solvagraph/nsgraph.hpp"
#include "solvagraph/numtheory.hpp"
#include "solvagraph/parallel.hpp"

using namespace solvagraph;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

int threads() { return default_thread_count(); }

std::vector<CatalogEntry> catalog_up_to(long long max_order) {
  std::vector<CatalogEntry> out;
  for (const auto& e : builtin_catalog())
    if (e.order <= max_order) out.push_back(e);
  return out;
}

// --- criterion 1 -----------------------------------------------------------
void golden_values(std::string&) {
  FiniteGroup g = make_catalog_group("A", 5);
  SolvabilizerEngine e(g, threads());
  auto c3 = e.sol_of_element(parse_element(g, "(1,2,3)"), RelationMode::Solvable);
  require(c3.size == 24, "three-cycle solvabilizer size is not 24");
  require(!c3.is_subgroup, "three-cycle solvabilizer must not be a subgroup");
  auto invol = e.sol_of_element(parse_element(g, "(2,3)(4,5)"), RelationMode::Solvable);
  require(invol.size == 36, "double-transposition solvabilizer size is not 36");
  require(e.radical(RelationMode::Solvable).count() == 1, "radical of A5 is not trivial");
}

// --- criterion 2 -----------------------------------------------------------
void degree_duality(std::string& note) {
  for (const char* spec : {"A5", "S5", "A6", "SL2(5)", "PSL2(7)", "A5 x C2"}) {
    FiniteGroup g = build_group(spec);
    SolvabilizerEngine e(g, threads());
    NonSolvableGraph full = build_graph(e, RelationMode::Solvable, false);
    for (int x = 0; x < g.order(); ++x)
      require(full.degrees[full.vertex_pos[x]] +
                      static_cast<long long>(e.row(x, RelationMode::Solvable).count()) ==
                  g.order(),
              std::string(spec) + ": duality broken at element " + std::to_string(x));
  }
  FiniteGroup a5 = make_catalog_group("A", 5);
  std::map<int, int> expect{{0, 1}, {24, 15}, {36, 20}, {50, 24}};
  require(oracle::naive_degree_multiset(a5) == expect,
          "brute-force degree multiset of A5 is off");
  SolvabilizerEngine e(a5, threads());
  NonSolvableGraph full = build_graph(e, RelationMode::Solvable, false);
  require(degree_stats(full).multiset == expect, "engine degree multiset of A5 is off");
  note = "6 groups, brute-force multiset cross-checked";
}

// --- criterion 3 -----------------------------------------------------------
void divisibility_suite(std::string& note) {
  int groups = 0;
  for (const auto& entry : catalog_up_to(720)) {
    FiniteGroup g = build_group(entry.spec);
    SolvabilizerEngine e(g, threads());
    long long radical = static_cast<long long>(e.radical(RelationMode::Solvable).count());
    NonSolvableGraph ind = build_graph(e, RelationMode::Solvable, true);
    long long sum_sol = 0, sum_nil = 0, sum_deg = 0;
    const auto& ct = g.classes();
    for (int c = 0; c < ct.count(); ++c) {
      int rep = ct.representatives[c];
      long long sol = static_cast<long long>(e.row(rep, RelationMode::Solvable).count());
      long long nil = static_cast<long long>(e.row(rep, RelationMode::Nilpotent).count());
      require(sol % radical == 0, entry.spec + ": radical size does not divide a solvabilizer");
      require(sol % g.element_order(rep) == 0,
              entry.spec + ": element order does not divide a solvabilizer");
      require(sol % ct.centralizer_orders[c] == 0,
              entry.spec + ": centralizer order does not divide a solvabilizer");
      require(nil % ct.centralizer_orders[c] == 0,
              entry.spec + ": centralizer order does not divide a nilpotentizer");
      sum_sol += ct.class_sizes[c] * sol;
      sum_nil += ct.class_sizes[c] * nil;
      sum_deg += ct.class_sizes[c] * (g.order() - sol);
    }
    for (std::size_t p = 0; p < ind.vertices.size(); ++p) {
      int x = ind.vertices[p];
      require(ind.degrees[p] % ct.centralizer_orders[ct.class_of[x]] == 0,
              entry.spec + ": centralizer order does not divide a degree");
    }
    require(sum_sol % g.order() == 0, entry.spec + ": solvabilizer sum not divisible");
    require(sum_nil % g.order() == 0, entry.spec + ": nilpotentizer sum not divisible");
    require(sum_deg % g.order() == 0, entry.spec + ": degree sum not divisible");
    ++groups;
  }
  note = std::to_string(groups) + " groups, zero failures";
}

// --- criterion 4 -----------------------------------------------------------
void sgroup_theorem(std::string& note) {
  int negatives = 0;
  for (const auto& entry : catalog_up_to(720)) {
    FiniteGroup g = build_group(entry.spec);
    SolvabilizerEngine e(g, threads());
    SGroupReport rep = e.s_group(RelationMode::Solvable);
    bool solv = is_solvable(g.full_set());
    require(rep.is_s_group == solv, entry.spec + ": S-group verdict disagrees with solvability");
    require(rep.witness.has_value() == !rep.is_s_group,
            entry.spec + ": witness presence inconsistent");
    if (rep.witness) {
      ++negatives;
      int a = rep.witness->a, b = rep.witness->b, x = rep.witness->x;
      std::vector<int> ax{a, x}, bx{b, x}, abx{g.mult(a, b), x};
      require(generated_subgroup_is_solvable(g, g.closure_bits(ax), ax),
              entry.spec + ": witness <a,x> is not solvable");
      require(generated_subgroup_is_solvable(g, g.closure_bits(bx), bx),
              entry.spec + ": witness <b,x> is not solvable");
      require(!generated_subgroup_is_solvable(g, g.closure_bits(abx), abx),
              entry.spec + ": witness <ab,x> is solvable");
    }
  }
  note = std::to_string(negatives) + " non-S-groups, all witnesses re-verified";
}

// --- criterion 5 -----------------------------------------------------------
void graph_suite(std::string& note) {
  std::set<std::string> expected{"A5", "S5", "SL2(5)", "A5 x C2", "A6", "S6", "PSL2(7)"};
  std::set<std::string> seen;
  for (const auto& entry : catalog_up_to(720)) {
    if (entry.solvable) continue;
    seen.insert(entry.spec);
    FiniteGroup g = build_group(entry.spec);
    SolvabilizerEngine e(g, threads());
    NonSolvableGraph full = build_graph(e, RelationMode::Solvable, false);
    NonSolvableGraph ind = build_graph(e, RelationMode::Solvable, true);
    auto d = diameter(ind);
    require(d && *d == 2, entry.spec + ": diameter is not 2");
    DegreeStats st = degree_stats(ind);
    require(st.min_degree > 5, entry.spec + ": minimum degree not above 5");
    require(st.max_degree < static_cast<int>(ind.vertex_count()) - 1,
            entry.spec + ": maximum degree reaches n-1");
    require(degree_stats(full).distinct_count != 2,
            entry.spec + ": full graph has exactly two distinct degrees");
    require(is_irregular(ind), entry.spec + ": induced graph is regular");
    for (std::size_t p = 0; p < ind.vertices.size(); ++p) {
      int x = ind.vertices[p];
      require(!is_prime(ind.degrees[p]), entry.spec + ": prime degree found");
      require(2 * g.element_order(x) <= ind.degrees[p],
              entry.spec + ": twice the element order exceeds the degree");
    }
    auto w = find_k44(ind);
    require(w.has_value(), entry.spec + ": no complete bipartite 4+4 witness");
    std::set<int> all;
    for (int u : w->left) all.insert(u);
    for (int v : w->right) all.insert(v);
    require(all.size() == 8, entry.spec + ": witness vertices are not distinct");
    for (int u : w->left)
      for (int v : w->right)
        require(ind.has_edge(u, v), entry.spec + ": witness edge missing");
  }
  for (const auto& name : expected)
    require(seen.count(name) == 1, "expected non-solvable catalog group missing: " + name);
  note = std::to_string(seen.size()) + " non-solvable groups";
}

// --- criterion 6 -----------------------------------------------------------
void quotient_law(std::string&) {
  auto check = [&](const FiniteGroup& g, const ElementSet& n, const std::string& who) {
    SolvabilizerEngine eg(const_cast<FiniteGroup&>(g), threads());
    QuotientGroup q = quotient_group(g, n);
    SolvabilizerEngine eq(q.group, threads());
    for (int c = 0; c < g.classes().count(); ++c) {
      int rep = g.classes().representatives[c];
      Bitset projected(q.group.order());
      eg.row(rep, RelationMode::Solvable).for_each([&](int i) { projected.set(q.projection[i]); });
      require(projected == eq.row(q.projection[rep], RelationMode::Solvable),
              who + ": projected solvabilizer mismatch at class " + std::to_string(c));
    }
  };
  FiniteGroup sl25 = make_catalog_group("SL2", 5);
  check(sl25, sl25.center(), "SL2(5) by its center");

  ProductGroup p = direct_product(make_catalog_group("A", 5), make_catalog_group("C", 2));
  ElementSet n(p.group);
  for (int j = 0; j < 2; ++j) n.add(p.inj_right[j]);
  check(p.group, n, "A5 x C2 by its second factor");
}

// --- criterion 7 -----------------------------------------------------------
void oracle_cross_checks(std::string& note) {
  int sweeps = 0, bfs = 0;
  for (const auto& entry : catalog_up_to(360)) {
    FiniteGroup g = build_group(entry.spec);
    SolvabilizerEngine e(g, threads());
    if (entry.order <= 168) {
      for (int x = 0; x < g.order(); ++x)
        require(e.row_by_sweep(x, RelationMode::Solvable) == e.row(x, RelationMode::Solvable),
                entry.spec + ": all-pairs sweep disagrees with the class-reduced row");
      ++sweeps;
    }
    if (!entry.solvable) {
      NonSolvableGraph ind = build_graph(e, RelationMode::Solvable, true);
      require(diameter(ind) == diameter_full_bfs(ind),
              entry.spec + ": class-representative BFS disagrees with full BFS");
      ++bfs;
    }
  }
  note = std::to_string(sweeps) + " sweep checks, " + std::to_string(bfs) + " BFS checks";
}

std::string g_cli_override;

// --- criterion 8 -----------------------------------------------------------
void determinism(std::string&) {
  std::string cli = g_cli_override;
  if (cli.empty())
    if (const char* env = std::getenv("SOLVAGRAPH_CLI")) cli = env;
  if (cli.empty())
    for (const char* guess : {"tools/solvagraph", "../tools/solvagraph", "build/tools/solvagraph"})
      if (std::ifstream(guess).good()) {
        cli = guess;
        break;
      }
  require(!cli.empty(),
          "cannot locate the CLI binary; set SOLVAGRAPH_CLI or pass it as the first argument");
  auto capture = [&](const std::string& file) {
    std::string cmd = cli + " analyze A5 --json > " + file + " 2>&1";
    require(std::system(cmd.c_str()) == 0, "analyze A5 --json did not exit cleanly");
    std::ifstream in(file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(file.c_str());
    return buf.str();
  };
  std::string first = capture("/tmp/solvagraph_accept_a.json");
  std::string second = capture("/tmp/solvagraph_accept_b.json");
  require(!first.empty(), "no output captured");
  require(first == second, "consecutive runs differ");
}

// --- criterion 9 -----------------------------------------------------------
void scale_ceiling(std::string& note) {
  FiniteGroup g = make_catalog_group("A", 7);
  require(g.order() == 2520, "A7 order is wrong");
  AnalysisOptions opts;
  opts.threads = threads();
  AnalysisReport rep = analyze(g, opts);
  for (const auto* row : rep.all_rows())
    require(row->pass, "A7 row failed: " + row->name + " " + row->detail);
  note = std::to_string(rep.all_rows().size()) + " rows pass at order 2520";
}

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<void(std::string&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_override = argv[1];
  std::vector<Criterion> criteria = {
      {"golden A5 solvabilizer values", 1.0, golden_values},
      {"degree-solvabilizer duality", 60.0, degree_duality},
      {"divisibility suite over the catalog (order <= 720)", 60.0, divisibility_suite},
      {"s-group equivalence with verified witnesses", 120.0, sgroup_theorem},
      {"graph law suite on non-solvable catalog groups", 300.0, graph_suite},
      {"quotient projection law", 60.0, quotient_law},
      {"oracle cross-checks (sweeps and BFS)", 120.0, oracle_cross_checks},
      {"byte-identical consecutive analyze runs", 60.0, determinism},
      {"scale ceiling: full verification of A7", 600.0, scale_ceiling},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    std::string error;
    try {
      c.body(note);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && secs < c.limit_seconds;
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << c.name << " ("
              << std::fixed << std::setprecision(2) << secs << " s, limit "
              << std::setprecision(0) << c.limit_seconds << " s)";
    if (!note.empty()) std::cout << " - " << note;
    if (!error.empty()) std::cout << " - " << error;
    if (error.empty() && secs >= c.limit_seconds) std::cout << " - over the time limit";
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
