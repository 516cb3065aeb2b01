#include "stcsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace stcsp {

Graph Graph::build(int n, const std::vector<std::tuple<int, int, double>>& edge_list,
                   const std::vector<std::pair<int, double>>& loop_list) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::map<std::pair<int, int>, double> merged;
  for (const auto& [a, b, w] : edge_list) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop in edge list; use loops");
    if (!(w > 0) || std::isnan(w)) throw std::invalid_argument("edge weight must be positive");
    merged[{std::min(a, b), std::max(a, b)}] += w;
  }
  Graph g;
  g.n = n;
  g.loops.assign(n, 0.0);
  for (const auto& [v, w] : loop_list) {
    if (v < 0 || v >= n) throw std::invalid_argument("loop vertex out of range");
    if (w < 0 || std::isnan(w)) throw std::invalid_argument("loop weight must be nonnegative");
    g.loops[v] += w;
  }
  g.edges.reserve(merged.size());
  for (const auto& [uv, w] : merged) g.edges.push_back({uv.first, uv.second, w});
  g.deg.assign(n, 0.0);
  g.adj.assign(n, {});
  for (const auto& e : g.edges) {
    g.deg[e.u] += e.w;
    g.deg[e.v] += e.w;
    g.adj[e.u].push_back({e.v, e.w});
    g.adj[e.v].push_back({e.u, e.w});
  }
  for (int v = 0; v < n; ++v) g.deg[v] += g.loops[v];
  return g;
}

double Graph::total_edge_weight() const {
  double s = 0;
  for (const auto& e : edges) s += e.w;
  return s;
}

double Graph::max_degree() const {
  double m = 0;
  for (double d : deg) m = std::max(m, d);
  return m;
}

double Graph::average_degree() const { return n == 0 ? 0.0 : 2.0 * total_edge_weight() / n; }

double Graph::volume() const { return std::accumulate(deg.begin(), deg.end(), 0.0); }

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].u == u && edges[i].v == v) return static_cast<int>(i);
  return -1;
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

VertexSet VertexSet::of(int universe, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int v : ids)
    if (v < 0 || v >= universe) throw std::invalid_argument("vertex id outside universe");
  return VertexSet{std::move(ids), universe};
}

VertexSet VertexSet::full(int universe) {
  std::vector<int> ids(universe);
  std::iota(ids.begin(), ids.end(), 0);
  return VertexSet{std::move(ids), universe};
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

VertexSet VertexSet::complement() const {
  std::vector<int> out;
  out.reserve(universe - size());
  size_t p = 0;
  for (int v = 0; v < universe; ++v) {
    if (p < members.size() && members[p] == v) {
      ++p;
    } else {
      out.push_back(v);
    }
  }
  return VertexSet{std::move(out), universe};
}

std::vector<char> VertexSet::mask() const {
  std::vector<char> m(universe, 0);
  for (int v : members) m[v] = 1;
  return m;
}

void Partition::validate() const {
  if (blocks.empty()) return;
  int universe = blocks.front().universe;
  std::vector<char> seen(universe, 0);
  for (const auto& b : blocks) {
    if (b.universe != universe) throw std::invalid_argument("mixed universes in partition");
    for (int v : b.members) {
      if (seen[v]) throw std::invalid_argument("partition blocks overlap");
      seen[v] = 1;
    }
  }
}

int Partition::covered() const {
  int c = 0;
  for (const auto& b : blocks) c += b.size();
  return c;
}

InducedGraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.members.empty()) throw std::invalid_argument("empty induced set");
  std::vector<int> new_id(g.n, -1);
  for (size_t i = 0; i < s.members.size(); ++i) new_id[s.members[i]] = static_cast<int>(i);
  std::vector<std::tuple<int, int, double>> edges;
  for (const auto& e : g.edges)
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) edges.push_back({new_id[e.u], new_id[e.v], e.w});
  std::vector<std::pair<int, double>> loops;
  for (int v : s.members)
    if (g.loops[v] > 0) loops.push_back({new_id[v], g.loops[v]});
  InducedGraph out;
  out.graph = Graph::build(s.size(), edges, loops);
  out.to_old = s.members;
  return out;
}

Boundary edge_boundary(const Graph& g, const VertexSet& s) {
  auto in = s.mask();
  Boundary b;
  for (const auto& e : g.edges) {
    if (in[e.u] != in[e.v]) {
      b.total += e.w;
      b.edges.push_back(e);
    }
  }
  return b;
}

double expansion(const Graph& g, const VertexSet& s) {
  if (s.size() == 0 || s.size() == g.n) throw std::invalid_argument("expansion needs a nonempty proper subset");
  auto in = s.mask();
  double vol_in = 0;
  for (int v : s.members) vol_in += g.deg[v];
  double vol_out = g.volume() - vol_in;
  double mn = std::min(vol_in, vol_out);
  if (mn <= 0) throw std::invalid_argument("zero-volume side");
  double cut = 0;
  for (const auto& e : g.edges)
    if (in[e.u] != in[e.v]) cut += e.w;
  return cut / mn;
}

Graph with_self_loops(const Graph& g, const std::vector<std::pair<int, int>>& f) {
  std::vector<char> drop(g.edges.size(), 0);
  std::vector<double> extra_loops(g.n, 0.0);
  for (auto [u, v] : f) {
    int idx = g.edge_index(u, v);
    if (idx < 0) throw std::invalid_argument("with_self_loops: pair is not an edge");
    if (drop[idx]) continue;  // duplicate entry in f
    drop[idx] = 1;
    extra_loops[g.edges[idx].u] += g.edges[idx].w;
    extra_loops[g.edges[idx].v] += g.edges[idx].w;
  }
  Graph out;
  out.n = g.n;
  out.loops = g.loops;
  for (int v = 0; v < g.n; ++v) out.loops[v] += extra_loops[v];
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (!drop[i]) out.edges.push_back(g.edges[i]);
  out.deg = g.deg;  // degrees preserved exactly
  out.adj.assign(g.n, {});
  for (const auto& e : out.edges) {
    out.adj[e.u].push_back({e.v, e.w});
    out.adj[e.v].push_back({e.u, e.w});
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  int nc = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = nc;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [v, w] : g.adj[u]) {
        (void)w;
        if (comp[v] < 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
      }
    }
    ++nc;
  }
  std::vector<std::vector<int>> bags(nc);
  for (int v = 0; v < g.n; ++v) bags[comp[v]].push_back(v);
  std::vector<VertexSet> out;
  out.reserve(nc);
  for (auto& b : bags) out.push_back(VertexSet{std::move(b), g.n});
  return out;
}

}  // namespace stcsp
