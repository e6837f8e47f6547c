#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace pellspace {

/// Undirected graph on at most 64 vertices, adjacency kept as bitmasks.
/// Big enough for every incompatibility graph at desk scale (<= 3*12-1).
struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  Graph() = default;
  explicit Graph(int vertices) : n(vertices), adj(vertices, 0) {}

  void add_edge(int u, int v) {
    adj[u] |= std::uint64_t(1) << v;
    adj[v] |= std::uint64_t(1) << u;
  }
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;
};

/// Complement graph (no self loops).
Graph complement(const Graph& g);

/// Vertex sets of the connected components, each sorted ascending.
std::vector<std::vector<int>> components(const Graph& g);

/// Induced subgraph; local vertex i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Backtracking isomorphism search with degree-sequence pruning; returns a
/// map from vertices of a to vertices of b, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

inline bool isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

/// All maximal cliques (Bron-Kerbosch with pivoting), as vertex bitmasks.
std::vector<std::uint64_t> maximal_cliques(const Graph& g);

}  // namespace pellspace
