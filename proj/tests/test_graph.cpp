#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stcsp/graph.hpp"

using namespace stcsp;

namespace {

Graph complete_graph(int n) {
  std::vector<std::tuple<int, int, double>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
  return Graph::build(n, e);
}

Graph path_graph(int n) {
  std::vector<std::tuple<int, int, double>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1.0});
  return Graph::build(n, e);
}

Graph two_cliques_bridge(int k) {
  std::vector<std::tuple<int, int, double>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      e.push_back({i, j, 1.0});
      e.push_back({k + i, k + j, 1.0});
    }
  e.push_back({0, k, 1.0});
  return Graph::build(2 * k, e);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0, 1);
  std::vector<std::tuple<int, int, double>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (U(rng) < p) e.push_back({i, j, 1.0});
  return Graph::build(n, e);
}

}  // namespace

TEST_CASE("construction merges parallel edges and checks invariants") {
  Graph g = Graph::build(3, {{0, 1, 1.0}, {1, 0, 2.0}, {1, 2, 1.0}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges[0].w == doctest::Approx(3.0));
  CHECK(g.deg[1] == doctest::Approx(4.0));
  CHECK_THROWS(Graph::build(2, {{0, 0, 1.0}}));
  CHECK_THROWS(Graph::build(2, {{0, 1, -1.0}}));
  CHECK_THROWS(Graph::build(2, {{0, 3, 1.0}}));
}

TEST_CASE("induced subgraph") {
  Graph k4 = complete_graph(4);
  auto [tri, map1] = induced_subgraph(k4, VertexSet::of(4, {0, 1, 2}));
  CHECK(tri.n == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(map1 == std::vector<int>{0, 1, 2});

  Graph p3 = path_graph(3);
  auto [iso, map2] = induced_subgraph(p3, VertexSet::of(3, {0, 2}));
  CHECK(iso.n == 2);
  CHECK(iso.edge_count() == 0);

  Graph g = two_cliques_bridge(10);
  std::vector<int> first10(10);
  for (int i = 0; i < 10; ++i) first10[i] = i;
  auto [k10, map3] = induced_subgraph(g, VertexSet::of(20, first10));
  CHECK(k10.edge_count() == 45);

  CHECK_THROWS_WITH(induced_subgraph(k4, VertexSet::empty(4)), "empty induced set");

  // full set is the identity
  auto [same, mp] = induced_subgraph(k4, VertexSet::full(4));
  CHECK(same.edge_count() == k4.edge_count());
  for (int i = 0; i < 4; ++i) CHECK(mp[i] == i);
}

TEST_CASE("edge boundary") {
  Graph k4 = complete_graph(4);
  auto b = edge_boundary(k4, VertexSet::of(4, {0}));
  CHECK(b.count() == 3);
  CHECK(b.total == doctest::Approx(3.0));

  // two disjoint triangles
  Graph tt = Graph::build(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  CHECK(edge_boundary(tt, VertexSet::of(6, {0, 1, 2})).total == doctest::Approx(0.0));

  Graph g = two_cliques_bridge(10);
  std::vector<int> first10(10);
  for (int i = 0; i < 10; ++i) first10[i] = i;
  CHECK(edge_boundary(g, VertexSet::of(20, first10)).count() == 1);
}

TEST_CASE("boundary is symmetric and partitions account for all weight") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(12, 0.4, rng);
    std::vector<int> a;
    for (int v = 0; v < 12; ++v)
      if (rng() & 1) a.push_back(v);
    auto s = VertexSet::of(12, a);
    auto sc = s.complement();
    CHECK(edge_boundary(g, s).total == doctest::Approx(edge_boundary(g, sc).total));
    if (s.size() > 0 && sc.size() > 0) {
      auto [ga, m1] = s.size() ? induced_subgraph(g, s) : induced_subgraph(g, sc);
      (void)m1;
      double wa = ga.total_edge_weight();
      auto [gb, m2] = induced_subgraph(g, sc);
      (void)m2;
      double wb = gb.total_edge_weight();
      CHECK(wa + wb + edge_boundary(g, s).total == doctest::Approx(g.total_edge_weight()));
    }
  }
}

TEST_CASE("expansion") {
  Graph k4 = complete_graph(4);  // 3-regular
  CHECK(expansion(k4, VertexSet::of(4, {0})) == doctest::Approx(1.0));

  Graph tt = Graph::build(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  CHECK(expansion(tt, VertexSet::of(6, {0, 1, 2})) == doctest::Approx(0.0));

  Graph g = two_cliques_bridge(4);  // volumes 13 / 13
  std::vector<int> side{0, 1, 2, 3};
  CHECK(expansion(g, VertexSet::of(8, side)) == doctest::Approx(1.0 / 13.0));

  Graph iso = Graph::build(3, {{0, 1, 1.0}});
  CHECK_THROWS_WITH(expansion(iso, VertexSet::of(3, {2})), "zero-volume side");
}

TEST_CASE("with_self_loops preserves degrees") {
  Graph tri = complete_graph(3);
  Graph all = with_self_loops(tri, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(all.edge_count() == 0);
  for (int v = 0; v < 3; ++v) {
    CHECK(all.loops[v] == doctest::Approx(2.0));
    CHECK(all.deg[v] == tri.deg[v]);
  }

  Graph same = with_self_loops(tri, {});
  CHECK(same.edge_count() == 3);

  Graph g = Graph::build(7, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 1}});
  Graph h = with_self_loops(g, {{2, 3}});
  for (int v = 0; v < 7; ++v) CHECK(h.deg[v] == g.deg[v]);
  CHECK(connected_components(h).size() == 3);  // two triangles + isolated 6

  CHECK_THROWS(with_self_loops(tri, {{0, 3}}));
}

TEST_CASE("random property: degree preservation under with_self_loops") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(15, 0.3, rng);
    if (g.edge_count() == 0) continue;
    std::vector<std::pair<int, int>> f;
    for (const auto& e : g.edges)
      if (rng() % 3 == 0) f.push_back({e.u, e.v});
    Graph h = with_self_loops(g, f);
    for (int v = 0; v < g.n; ++v) CHECK(h.deg[v] == g.deg[v]);
  }
}
