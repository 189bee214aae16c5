#include "solvagraph/nsgraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "solvagraph/errors.hpp"
#include "solvagraph/numtheory.hpp"

namespace solvagraph {

std::size_t NonSolvableGraph::edge_count() const {
  std::size_t s = 0;
  for (int d : degrees) s += static_cast<std::size_t>(d);
  return s / 2;
}

bool NonSolvableGraph::has_edge(int elem_i, int elem_j) const {
  int pi = vertex_pos[elem_i];
  int pj = vertex_pos[elem_j];
  if (pi < 0 || pj < 0 || pi == pj) return false;
  return adjacency[pi].test(pj);
}

NonSolvableGraph build_graph(SolvabilizerEngine& engine, RelationMode mode, bool induced) {
  const FiniteGroup& g = engine.group();
  int n = g.order();
  engine.ensure_all_rows(mode);
  ElementSet radical = engine.radical(mode);

  NonSolvableGraph graph;
  graph.group = &g;
  graph.mode = mode;
  graph.induced = induced;
  graph.radical_size = radical.count();
  graph.vertex_pos.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (induced && radical.contains(i)) continue;
    graph.vertex_pos[i] = static_cast<int>(graph.vertices.size());
    graph.vertices.push_back(i);
  }
  int nv = static_cast<int>(graph.vertices.size());
  graph.adjacency.reserve(nv);
  graph.degrees.reserve(nv);
  for (int p = 0; p < nv; ++p) {
    int x = graph.vertices[p];
    const Bitset& row = engine.row(x, mode);
    Bitset adj(nv);
    if (!induced) {
      adj = row.complement();  // the row always contains x itself
    } else {
      for (int q = 0; q < nv; ++q)
        if (!row.test(graph.vertices[q])) adj.set(q);
    }
    graph.degrees.push_back(static_cast<int>(adj.count()));
    graph.adjacency.push_back(std::move(adj));
  }
  return graph;
}

namespace {

// Eccentricity of src in positions; -1 when the graph is disconnected.
int bfs_eccentricity(const NonSolvableGraph& graph, int src) {
  int nv = static_cast<int>(graph.vertices.size());
  Bitset visited(nv), frontier(nv);
  visited.set(src);
  frontier.set(src);
  int dist = 0;
  while (true) {
    Bitset next(nv);
    frontier.for_each([&](int v) { next |= graph.adjacency[v]; });
    next.subtract(visited);
    if (next.none()) break;
    visited |= next;
    frontier = std::move(next);
    ++dist;
  }
  if (visited.count() != static_cast<std::size_t>(nv)) return -1;
  return dist;
}

}  // namespace

std::optional<int> diameter(const NonSolvableGraph& graph) {
  if (graph.vertices.empty()) throw EmptyGraph("diameter of an empty graph");
  const FiniteGroup& g = *graph.group;
  int best = 0;
  for (int c = 0; c < g.classes().count(); ++c) {
    int rep = g.classes().representatives[c];
    int pos = graph.vertex_pos[rep];
    if (pos < 0) continue;
    int e = bfs_eccentricity(graph, pos);
    if (e < 0) return std::nullopt;
    best = std::max(best, e);
  }
  return best;
}

std::optional<int> diameter_full_bfs(const NonSolvableGraph& graph) {
  if (graph.vertices.empty()) throw EmptyGraph("diameter of an empty graph");
  int best = 0;
  for (std::size_t p = 0; p < graph.vertices.size(); ++p) {
    int e = bfs_eccentricity(graph, static_cast<int>(p));
    if (e < 0) return std::nullopt;
    best = std::max(best, e);
  }
  return best;
}

DegreeStats degree_stats(const NonSolvableGraph& graph) {
  DegreeStats st;
  for (int d : graph.degrees) ++st.multiset[d];
  st.distinct_count = st.multiset.size();
  if (!st.multiset.empty()) {
    st.min_degree = st.multiset.begin()->first;
    st.max_degree = st.multiset.rbegin()->first;
  }
  return st;
}

namespace {

bool verify_k44(const NonSolvableGraph& graph, const K44Witness& w) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (w.left[i] == w.left[j] || w.right[i] == w.right[j]) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (w.left[i] == w.right[j]) return false;
  for (int u : w.left)
    for (int v : w.right)
      if (!graph.has_edge(u, v)) return false;
  return true;
}

std::optional<K44Witness> k44_constructive(const NonSolvableGraph& graph) {
  const FiniteGroup& g = *graph.group;
  std::vector<int> class_ids;
  for (int c = 0; c < g.classes().count(); ++c) class_ids.push_back(c);
  std::sort(class_ids.begin(), class_ids.end(), [&](int a, int b) {
    int oa = g.element_order(g.classes().representatives[a]);
    int ob = g.element_order(g.classes().representatives[b]);
    return oa != ob ? oa > ob : a < b;
  });
  for (int c : class_ids) {
    int x = g.classes().representatives[c];
    if (graph.vertex_pos[x] < 0) continue;
    long long p = prime_power_base(g.element_order(x));
    if (p < 5) continue;
    const Bitset& adj = graph.adjacency[graph.vertex_pos[x]];
    int ypos = adj.find_first();
    if (ypos < 0) continue;
    int y = graph.vertices[ypos];
    K44Witness w;
    for (int i = 0; i < 4; ++i) {
      w.left[i] = g.power(x, i + 1);  // 1..4 are coprime to p^t when p >= 5
      w.right[i] = g.mult(w.left[i], y);
    }
    if (verify_k44(graph, w)) return w;
  }
  return std::nullopt;
}

std::optional<K44Witness> k44_exhaustive(const NonSolvableGraph& graph) {
  const FiniteGroup& g = *graph.group;
  // One class only: the one whose representative has the largest degree.
  int best_class = -1, best_deg = -1;
  for (int c = 0; c < g.classes().count(); ++c) {
    int rep = g.classes().representatives[c];
    int pos = graph.vertex_pos[rep];
    if (pos < 0) continue;
    if (graph.degrees[pos] > best_deg) {
      best_deg = graph.degrees[pos];
      best_class = c;
    }
  }
  if (best_class < 0) return std::nullopt;
  std::vector<int> pool;
  for (std::size_t p = 0; p < graph.vertices.size(); ++p)
    if (g.classes().class_of[graph.vertices[p]] == best_class) pool.push_back(static_cast<int>(p));

  long long budget = 2'000'000;
  std::array<int, 4> pick{};
  Bitset common(graph.vertices.size());
  std::optional<K44Witness> found;

  std::function<void(int, int, const Bitset&)> rec = [&](int depth, int start,
                                                         const Bitset& com) {
    if (found || budget-- <= 0) return;
    if (depth == 4) {
      Bitset v = com;
      for (int q : pick) v.reset(q);
      if (v.count() < 4) return;
      K44Witness w;
      for (int i = 0; i < 4; ++i) w.left[i] = graph.vertices[pick[i]];
      int k = 0;
      v.for_each([&](int q) {
        if (k < 4) w.right[k++] = graph.vertices[q];
      });
      if (verify_k44(graph, w)) {
        w.constructive = false;
        found = w;
      }
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      Bitset next = depth == 0 ? graph.adjacency[pool[i]] : com;
      if (depth > 0) next &= graph.adjacency[pool[i]];
      if (next.count() < 4) continue;
      pick[depth] = pool[i];
      rec(depth + 1, static_cast<int>(i) + 1, next);
      if (found) return;
    }
  };
  rec(0, 0, common);
  return found;
}

}  // namespace

std::optional<K44Witness> find_k44(const NonSolvableGraph& graph) {
  if (graph.vertices.empty())
    throw EmptyGraph("bipartite witness search requires a graph with vertices");
  if (auto w = k44_constructive(graph)) return w;
  return k44_exhaustive(graph);
}

bool is_irregular(const NonSolvableGraph& graph) {
  if (graph.vertices.empty()) throw EmptyGraph("regularity of an empty graph");
  return degree_stats(graph).distinct_count >= 2;
}

std::vector<CheckRow> check_degree_laws(const NonSolvableGraph& induced,
                                        const NonSolvableGraph& full) {
  const FiniteGroup& g = *induced.group;
  int n = g.order();
  std::vector<CheckRow> rows;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rows.push_back(CheckRow{std::move(name), pass, std::move(detail)});
  };
  auto vacuous = [&](std::string name) {
    rows.push_back(
        CheckRow{std::move(name), true,
                 std::string("vacuous: the ") + mode_name(induced.mode) + " graph is empty"});
  };
  bool relation_trivial = induced.vertices.empty();
  DegreeStats ind_stats = degree_stats(induced);
  DegreeStats full_stats = degree_stats(full);

  {
    long long sum = 0;
    for (int d : full.degrees) sum += d;
    add("degree_sum_even", sum % 2 == 0, "sum=" + std::to_string(sum));
    add("order_divides_degree_sum", sum % n == 0, "sum=" + std::to_string(sum));
  }
  add("distinct_degree_count_not_two", full_stats.distinct_count != 2,
      "distinct=" + std::to_string(full_stats.distinct_count));

  {
    bool pass = true;
    std::string detail;
    for (std::size_t p = 0; p < induced.vertices.size() && pass; ++p) {
      int x = induced.vertices[p];
      long long cent = g.classes().centralizer_orders[g.classes().class_of[x]];
      if (induced.degrees[p] % cent != 0) {
        pass = false;
        detail = "x=" + g.element_label(x) + " deg=" + std::to_string(induced.degrees[p]) +
                 " |C|=" + std::to_string(cent);
      }
    }
    if (relation_trivial)
      vacuous("centralizer_order_divides_degree");
    else
      add("centralizer_order_divides_degree", pass, detail);
  }

  if (induced.mode == RelationMode::Solvable) {
    if (relation_trivial) {
      vacuous("element_order_below_degree");
      vacuous("twice_order_at_most_degree");
      vacuous("no_prime_degree");
      vacuous("max_degree_below_vertex_count_minus_one");
      vacuous("min_degree_above_five");
    } else {
      bool ord_lt = true, twice = true, noprime = true;
      std::string d1, d2, d3;
      for (std::size_t p = 0; p < induced.vertices.size(); ++p) {
        int x = induced.vertices[p];
        int o = g.element_order(x);
        int deg = induced.degrees[p];
        if (ord_lt && !(o < deg)) {
          ord_lt = false;
          d1 = "x=" + g.element_label(x);
        }
        if (twice && !(2 * o <= deg)) {
          twice = false;
          d2 = "x=" + g.element_label(x);
        }
        if (noprime && is_prime(deg)) {
          noprime = false;
          d3 = "x=" + g.element_label(x) + " deg=" + std::to_string(deg);
        }
      }
      add("element_order_below_degree", ord_lt, d1);
      add("twice_order_at_most_degree", twice, d2);
      add("no_prime_degree", noprime, d3);
      add("max_degree_below_vertex_count_minus_one",
          ind_stats.max_degree < static_cast<int>(induced.vertex_count()) - 1,
          "max=" + std::to_string(ind_stats.max_degree) +
              " n=" + std::to_string(induced.vertex_count()));
      add("min_degree_above_five", ind_stats.min_degree > 5,
          "min=" + std::to_string(ind_stats.min_degree));
    }
  }
  return rows;
}

std::string export_graph(const NonSolvableGraph& graph, const std::string& format,
                         const std::vector<CheckRow>* report) {
  const FiniteGroup& g = *graph.group;
  if (format == "dot") {
    std::ostringstream out;
    out << "graph \"" << g.label() << "\" {\n";
    for (int x : graph.vertices)
      out << "  n" << x << " [label=\"" << x << ": " << g.element_label(x) << "\"];\n";
    for (std::size_t p = 0; p < graph.vertices.size(); ++p)
      graph.adjacency[p].for_each([&](int q) {
        if (static_cast<std::size_t>(q) > p)
          out << "  n" << graph.vertices[p] << " -- n" << graph.vertices[q] << ";\n";
      });
    out << "}\n";
    return out.str();
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["group"] = {{"label", g.label()},
                  {"order", g.order()},
                  {"radical_size", graph.radical_size}};
    j["mode"] = mode_name(graph.mode);
    j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t p = 0; p < graph.vertices.size(); ++p) {
      int x = graph.vertices[p];
      j["vertices"].push_back({{"index", x},
                               {"label", g.element_label(x)},
                               {"degree", graph.degrees[p]},
                               {"order", g.element_order(x)}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (std::size_t p = 0; p < graph.vertices.size(); ++p)
      graph.adjacency[p].for_each([&](int q) {
        if (static_cast<std::size_t>(q) > p)
          j["edges"].push_back({graph.vertices[p], graph.vertices[q]});
      });
    if (report) {
      j["report"] = nlohmann::ordered_json::array();
      for (const auto& row : *report)
        j["report"].push_back(
            {{"name", row.name}, {"status", row.pass ? "pass" : "fail"}, {"detail", row.detail}});
    }
    return j.dump(2) + "\n";
  }
  throw UnsupportedFormat("unsupported graph format: " + format);
}

GraphReport graph_report(SolvabilizerEngine& engine, RelationMode mode, const CheckOptions& opts) {
  const FiniteGroup& g = engine.group();
  int n = g.order();
  NonSolvableGraph full = build_graph(engine, mode, false);
  NonSolvableGraph ind = build_graph(engine, mode, true);
  bool relation_trivial = ind.vertices.empty();
  const char* rel = mode == RelationMode::Solvable ? "solvabilizer" : "nilpotentizer";

  GraphReport rep;
  rep.vertex_count = ind.vertex_count();
  rep.edge_count = ind.edge_count();
  DegreeStats ind_stats = degree_stats(ind);
  DegreeStats full_stats = degree_stats(full);
  rep.min_degree = ind_stats.min_degree;
  rep.max_degree = ind_stats.max_degree;
  rep.distinct_degree_count = ind_stats.distinct_count;
  rep.full_distinct_degree_count = full_stats.distinct_count;

  std::vector<CheckRow>& rows = rep.rows;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rows.push_back(CheckRow{std::move(name), pass, std::move(detail)});
  };
  auto vacuous = [&](std::string name) {
    rows.push_back(CheckRow{std::move(name), true,
                            std::string("vacuous: the ") + mode_name(mode) + " graph is empty"});
  };

  bool whole_related = mode == RelationMode::Solvable ? is_solvable(g.full_set())
                                                      : is_nilpotent(g.full_set());
  add("empty_graph_iff_whole_group_related", (full.edge_count() == 0) == whole_related);

  {
    bool pass = true;
    std::string detail;
    ElementSet radical = engine.radical(mode);
    for (int x = 0; x < n && pass; ++x) {
      bool isolated = full.degrees[full.vertex_pos[x]] == 0;
      if (isolated != radical.contains(x)) {
        pass = false;
        detail = "x=" + g.element_label(x);
      }
    }
    add("isolated_vertices_match_radical", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (int x = 0; x < n && pass; ++x) {
      std::size_t sol = engine.row(x, mode).count();
      int deg = full.degrees[full.vertex_pos[x]];
      if (static_cast<std::size_t>(deg) + sol != static_cast<std::size_t>(n)) {
        pass = false;
        detail = "x=" + g.element_label(x) + " deg=" + std::to_string(deg) + " |" + rel +
                 "|=" + std::to_string(sol);
      }
    }
    add(std::string("degree_") + rel + "_duality", pass, detail);
  }

  for (auto& row : check_degree_laws(ind, full)) rows.push_back(std::move(row));

  {
    bool pass = true;
    std::string detail;
    for (int gen : g.generators()) {
      for (std::size_t p = 0; p < ind.vertices.size() && pass; ++p) {
        int x = ind.vertices[p];
        int gx = g.conjugate(gen, x);
        ind.adjacency[p].for_each([&](int q) {
          if (pass && !ind.has_edge(gx, g.conjugate(gen, ind.vertices[q]))) {
            pass = false;
            detail = "g=" + g.element_label(gen) + " x=" + g.element_label(x);
          }
        });
      }
    }
    if (relation_trivial)
      vacuous("automorphism_preserves_adjacency");
    else
      add("automorphism_preserves_adjacency", pass, detail);
  }

  if (relation_trivial) {
    vacuous("induced_graph_irregular");
  } else {
    add("induced_graph_irregular", is_irregular(ind),
        "distinct degrees=" + std::to_string(ind_stats.distinct_count));
  }

  if (mode == RelationMode::Solvable) {
    if (relation_trivial) {
      vacuous("induced_graph_diameter_two");
      vacuous("diameter_bfs_oracle_agreement");
      vacuous("bipartite_4x4_witness");
      vacuous("bipartite_4x4_constructive_route");
      vacuous("nonplanarity_certificate");
    } else {
      rep.diam = diameter(ind);
      add("induced_graph_diameter_two", rep.diam && *rep.diam == 2,
          rep.diam ? "diameter=" + std::to_string(*rep.diam) : "graph disconnected");
      if (opts.deep_oracles && n <= 360) {
        auto oracle = diameter_full_bfs(ind);
        add("diameter_bfs_oracle_agreement", oracle == rep.diam);
      } else {
        rows.push_back(
            CheckRow{"diameter_bfs_oracle_agreement", true, "skipped: order above oracle bound"});
      }

      rep.k44 = find_k44(ind);
      if (rep.k44 && verify_k44(ind, *rep.k44)) {
        std::ostringstream d;
        d << "U={";
        for (int i = 0; i < 4; ++i) d << (i ? "," : "") << g.element_label(rep.k44->left[i]);
        d << "} V={";
        for (int i = 0; i < 4; ++i) d << (i ? "," : "") << g.element_label(rep.k44->right[i]);
        d << "}";
        add("bipartite_4x4_witness", true, d.str());
        add("bipartite_4x4_constructive_route", rep.k44->constructive,
            rep.k44->constructive ? "" : "constructive route found no qualifying element");
        add("nonplanarity_certificate", true, "certified by the verified 4x4 witness");
      } else {
        add("bipartite_4x4_witness", false, "no verified witness found");
        add("bipartite_4x4_constructive_route", false, "constructive route found no witness");
        add("nonplanarity_certificate", false, "no witness");
      }
    }

    // Every edge of this graph must appear in the nilpotent-relation graph.
    {
      bool pass = true;
      std::string detail;
      for (int x = 0; x < n && pass; ++x) {
        if (!engine.row(x, RelationMode::Nilpotent).is_subset_of(engine.row(x, RelationMode::Solvable))) {
          pass = false;
          detail = "x=" + g.element_label(x);
        }
      }
      add("solvable_edges_within_nilpotent_edges", pass, detail);
    }
  }

  return rep;
}

}  // namespace solvagraph
