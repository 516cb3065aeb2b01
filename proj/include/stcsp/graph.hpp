#pragma once

#include <string>
#include <utility>
#include <vector>

namespace stcsp {

/// Weighted undirected graph. Self-loops carry their own weight table and
/// contribute to the degree of their vertex; the edge list never contains
/// them. Parallel edges are merged (weights added) at construction.
struct Graph {
  struct Edge {
    int u = 0, v = 0;  // u < v
    double w = 1.0;
  };

  int n = 0;
  std::vector<Edge> edges;
  std::vector<double> loops;  // per-vertex loop weight, size n
  std::vector<double> deg;    // incident edge weight + loop weight, size n
  std::vector<std::vector<std::pair<int, double>>> adj;  // neighbor, weight

  static Graph build(int n, const std::vector<std::tuple<int, int, double>>& edge_list,
                     const std::vector<std::pair<int, double>>& loop_list = {});

  int edge_count() const { return static_cast<int>(edges.size()); }
  double total_edge_weight() const;
  double max_degree() const;
  double average_degree() const;  // 2 * total edge weight / n
  double volume() const;          // sum of degrees
  bool has_edge(int u, int v) const;
  /// Index into `edges` for the unordered pair, or -1.
  int edge_index(int u, int v) const;
};

/// Sorted, duplicate-free set of vertex ids within a universe [0, n).
struct VertexSet {
  std::vector<int> members;  // strictly increasing
  int universe = 0;

  static VertexSet of(int universe, std::vector<int> ids);
  static VertexSet full(int universe);
  static VertexSet empty(int universe) { return VertexSet{{}, universe}; }

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int v) const;
  VertexSet complement() const;
  /// Membership bitmap over the universe.
  std::vector<char> mask() const;
};

struct Partition {
  std::vector<VertexSet> blocks;

  /// Throws if blocks overlap or leave their universe.
  void validate() const;
  int covered() const;
};

struct InducedGraph {
  Graph graph;
  std::vector<int> to_old;  // new id -> old id
};

/// G[S] with weights preserved; the map is new id -> old id.
InducedGraph induced_subgraph(const Graph& g, const VertexSet& s);

struct Boundary {
  double total = 0.0;
  std::vector<Graph::Edge> edges;
  int count() const { return static_cast<int>(edges.size()); }
};

/// Edges with exactly one endpoint in s, and their weight sum.
Boundary edge_boundary(const Graph& g, const VertexSet& s);

/// Boundary weight over the smaller side's volume.
double expansion(const Graph& g, const VertexSet& s);

/// Removes each edge in f and adds its weight as a self-loop at both
/// endpoints. Degrees are unchanged.
Graph with_self_loops(const Graph& g, const std::vector<std::pair<int, int>>& f);

/// Connected components (loops are ignored; isolated vertices are their own
/// component).
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace stcsp
