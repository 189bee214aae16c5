#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solvagraph/solvabilizer.hpp"

namespace solvagraph {

// Graph with element pairs as edges whenever the pair generates a
// non-solvable (resp. non-nilpotent) subgroup. Vertices carry element
// indices; adjacency rows are bitsets over dense vertex positions.
struct NonSolvableGraph {
  const FiniteGroup* group = nullptr;
  RelationMode mode = RelationMode::Solvable;
  bool induced = false;
  std::vector<int> vertices;    // element indices, ascending
  std::vector<int> vertex_pos;  // element index -> position, -1 if absent
  std::vector<Bitset> adjacency;
  std::vector<int> degrees;
  std::size_t radical_size = 0;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const;
  bool has_edge(int elem_i, int elem_j) const;
};

// induced=true drops the radical (isolated) vertices; for a solvable group
// that leaves the empty graph.
NonSolvableGraph build_graph(SolvabilizerEngine& engine, RelationMode mode, bool induced);

// Maximum eccentricity via one BFS per conjugacy-class representative
// (conjugation acts as a graph automorphism). nullopt means disconnected.
std::optional<int> diameter(const NonSolvableGraph& graph);
// Full per-vertex BFS; the cross-check for the class-reduced version.
std::optional<int> diameter_full_bfs(const NonSolvableGraph& graph);

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  std::size_t distinct_count = 0;
  std::map<int, int> multiset;  // degree -> vertex count
};
DegreeStats degree_stats(const NonSolvableGraph& graph);

struct K44Witness {
  std::array<int, 4> left{};   // element indices
  std::array<int, 4> right{};
  bool constructive = true;
};

// Complete-bipartite 4+4 witness. Constructive route: powers of a vertex of
// prime-power order p^t (p >= 5) against those powers times a neighbour,
// with all 16 edges verified; falls back to a bounded exhaustive search.
std::optional<K44Witness> find_k44(const NonSolvableGraph& graph);

bool is_irregular(const NonSolvableGraph& graph);

// Per-vertex and degree-sum laws, computed from the graphs alone. The laws
// specific to the solvable relation are emitted only in that mode; failures
// come back as rows, never exceptions.
std::vector<CheckRow> check_degree_laws(const NonSolvableGraph& induced,
                                        const NonSolvableGraph& full);

// Deterministic DOT or JSON bytes; an attached report lands in the JSON.
std::string export_graph(const NonSolvableGraph& graph, const std::string& format,
                         const std::vector<CheckRow>* report = nullptr);

struct GraphReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  int min_degree = 0;
  int max_degree = 0;
  std::size_t distinct_degree_count = 0;       // induced graph
  std::size_t full_distinct_degree_count = 0;  // includes the radical's zeros
  std::optional<int> diam;
  std::optional<K44Witness> k44;
  std::vector<CheckRow> rows;
};

// The full graph-law suite for one group and relation mode. The laws that
// hold only for the solvable relation are run only in that mode; everything
// is vacuous-pass on relation-trivial (empty) graphs.
GraphReport graph_report(SolvabilizerEngine& engine, RelationMode mode, const CheckOptions& opts);

}  // namespace solvagraph
