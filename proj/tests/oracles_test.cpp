#include "edginj/graph.hpp"
#include "edginj/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace edginj;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph colored_c4(std::vector<int> colors) {
  Graph g(4);
  for (int i = 0; i < 4; ++i) g.add_colored_edge(i, (i + 1) % 4, colors[static_cast<std::size_t>(i)]);
  return g;
}

}  // namespace

// values cross-checked with a separate networkx/itertools enumeration
TEST(Maps, FrozenValues) {
  auto p2 = make_pattern("P", {2}), k3 = make_pattern("K", {3}), k4 = make_pattern("K", {4});
  EXPECT_EQ(count_hom(p2, k3), 12);
  EXPECT_EQ(count_emb(p2, k3), 6);
  EXPECT_EQ(count_edginj(p2, k3), 6);
  EXPECT_EQ(count_emb(make_pattern("S", {3}), k4), 24);
  EXPECT_EQ(count_edginj(make_pattern("mP2", {2}), k4), 240);
  EXPECT_EQ(count_hom(make_pattern("K", {1}), k4), 4);
  EXPECT_EQ(count_edginj(make_pattern("C", {3}), make_pattern("C", {5})), 0);
}

TEST(Maps, EdgInjAllowsVertexCollisions) {
  // P_3 wraps around a triangle: endpoints coincide, edges stay distinct
  EXPECT_EQ(count_edginj(make_pattern("P", {3}), make_pattern("K", {3})), 6);
  EXPECT_EQ(count_emb(make_pattern("P", {3}), make_pattern("K", {3})), 0);
}

TEST(Maps, Weighted) {
  Graph k2(2);
  k2.add_weighted_edge(0, 1, 5);
  EXPECT_EQ(count_edginj_weighted(make_pattern("P", {1}), k2), 10);

  Graph k4(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.add_weighted_edge(u, v, (u == 0 && v == 1) ? 2 : 1);
  }
  // two triangles through the heavy edge: 6 * (2 * 2 + 2 * 1) = 36
  EXPECT_EQ(count_edginj_weighted(make_pattern("C", {3}), k4), 36);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_graph(rng, 5, 0.6);
    Graph w(g.num_vertices());
    for (const Edge& e : g.edges()) w.add_weighted_edge(e.u, e.v, 1);
    auto h = random_graph(rng, 4, 0.5);
    EXPECT_EQ(count_edginj_weighted(h, w), count_edginj(h, g));
  }
}

TEST(Maps, CapIsExplicit) {
  Caps caps;
  caps.max_pattern_vertices = 3;
  EXPECT_THROW(count_hom(make_pattern("K", {4}), make_pattern("K", {4}), caps), CapExceeded);
}

TEST(Maps, Sandwich) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    Graph h = random_graph(rng, 1 + i % 5, 0.5), g = random_graph(rng, 2 + i % 5, 0.6);
    const Count emb = count_emb(h, g), inj = count_edginj(h, g), hom = count_hom(h, g);
    EXPECT_LE(emb, inj);
    EXPECT_LE(inj, hom);
    EXPECT_EQ(count_edginj_via_partition_sum(h, g), inj);
  }
}

TEST(Maps, PartitionSumExamples) {
  auto k4 = make_pattern("K", {4});
  EXPECT_EQ(count_edginj_via_partition_sum(make_pattern("P", {1}), k4), 2 * k4.num_edges());
  EXPECT_EQ(count_edginj_via_partition_sum(make_pattern("P", {2}), make_pattern("K", {3})), 6);
}

TEST(Maps, CliquesAreEmbeddings) {
  std::mt19937_64 rng(5);
  std::vector<Graph> patterns;
  for (int a = 2; a <= 4; ++a) patterns.push_back(make_pattern("K", {a}));
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) patterns.push_back(make_pattern("Kab", {a, b}));
  }
  patterns.push_back(make_pattern("W", {1}));
  patterns.push_back(make_pattern("W", {2}));
  for (int i = 0; i < 15; ++i) {
    Graph g = random_graph(rng, 6, 0.7);
    for (const Graph& h : patterns) EXPECT_EQ(count_edginj(h, g), count_emb(h, g));
  }
}

TEST(Maps, WedgesVersusLineGraphMatchings) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 12; ++i) {
    Graph g = random_graph(rng, 3 + i % 4, 0.6);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(count_edginj(make_pattern("mP2", {k}), g, Caps::for_pipelines()),
                power(2, static_cast<unsigned>(k)) * factorial(k) * count_matchings(line_graph(g), k, false));
      EXPECT_EQ(count_edginj_wedges(k, g), count_edginj(make_pattern("mP2", {k}), g, Caps::for_pipelines()));
    }
  }
}

TEST(Matchings, Examples) {
  EXPECT_EQ(count_matchings(make_pattern("C", {4}), 2, false), 2);
  EXPECT_EQ(count_matchings(make_pattern("C", {6}), 0, false), 1);
  EXPECT_EQ(count_matchings(make_pattern("C", {6}), 3, false), 2);
  EXPECT_EQ(count_matchings(colored_c4({1, 2, 1, 2}), 2, true), 0);
  EXPECT_EQ(count_matchings(colored_c4({1, 1, 2, 2}), 2, true), 2);
}

TEST(Matchings, ColorfulInclusionExclusion) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const int k = 1 + i % 3;
    Graph base = random_graph(rng, 6, 0.5);
    Graph g(base.num_vertices());
    for (const Edge& e : base.edges()) g.add_colored_edge(e.u, e.v, 1 + static_cast<int>(rng() % static_cast<unsigned>(k)));
    g.set_num_colors(k);
    Count sum = 0;
    for (int s = 0; s < (1 << k); ++s) {
      std::vector<bool> keep(static_cast<std::size_t>(g.num_edges()));
      for (int e = 0; e < g.num_edges(); ++e) keep[static_cast<std::size_t>(e)] = (s >> (g.color(e) - 1)) & 1;
      const Count term = count_matchings(underlying_graph(edge_subgraph(g, keep)), k, false);
      sum += ((k - __builtin_popcount(static_cast<unsigned>(s))) % 2 == 0) ? term : Count(-term);
    }
    EXPECT_EQ(count_matchings(g, k, true), sum);
  }
}

TEST(PerfectMatchings, Examples) {
  EXPECT_EQ(count_perfect_matchings(make_pattern("K", {4})), 3);
  EXPECT_EQ(count_perfect_matchings(make_pattern("Kab", {3, 3})), 6);
  EXPECT_EQ(count_perfect_matchings(make_pattern("K", {3})), 0);
  auto collar = make_pattern(PatternKind::collar, {2});
  EXPECT_EQ(count_perfect_matchings(collar), 1);
  EXPECT_EQ(count_perfect_matchings(remove_vertices(collar, {collar.anchor("u"), collar.anchor("v")})), 9);
}

TEST(PerfectMatchings, ByMarkedAddsUp) {
  auto k4 = make_pattern("K", {4});
  auto by = count_perfect_matchings_by_marked(k4, {0, 1, 2});
  Count total = 0;
  for (const auto& x : by) total += x;
  EXPECT_EQ(total, 3);
}

TEST(OddEdgeSets, Examples) {
  EXPECT_EQ(count_odd_edge_sets_enum(make_pattern("K", {4})), 8);
  EXPECT_EQ(count_odd_edge_sets_enum(make_pattern("P", {1})), 1);
  EXPECT_EQ(count_odd_edge_sets_enum(make_pattern("K", {3})), 0);
  auto by = count_odd_edge_sets_by_size(make_pattern("K", {4}));
  EXPECT_EQ(by[2], 3);  // perfect matchings
  EXPECT_EQ(by[3], 4);  // stars
  EXPECT_EQ(by[6], 1);  // everything
}

TEST(EdgeDisjoint, Examples) {
  EXPECT_EQ(count_edge_disjoint(make_pattern("K", {4}), 3, WalkKind::cycle), 4);
  EXPECT_EQ(count_edge_disjoint(make_pattern("C", {5}), 5, WalkKind::cycle), 1);
  EXPECT_EQ(count_edge_disjoint(make_pattern("P", {3}), 3, WalkKind::path), 1);
  EXPECT_EQ(count_edge_disjoint(make_pattern("P", {3}), 2, WalkKind::path), 2);
  // bowtie: the closed 6-trail through the shared vertex can run each
  // triangle either way, two cyclic trails up to rotation and reversal
  Graph bowtie(5);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}) bowtie.add_edge(a, b);
  EXPECT_EQ(count_edge_disjoint(bowtie, 6, WalkKind::cycle, Caps::for_pipelines()), 2);
  EXPECT_EQ(count_simple_cycles(bowtie, 6), 0);
}

TEST(SimpleCycles, Examples) {
  EXPECT_EQ(count_simple_cycles(make_pattern("K", {4}), 3), 4);
  EXPECT_EQ(count_simple_cycles(make_pattern("K", {4}), 4), 3);
  EXPECT_EQ(count_simple_cycles(make_pattern("C", {5}), 3), 0);
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(make_pattern("C", {4}), make_pattern("Kab", {2, 2})));
  EXPECT_FALSE(is_isomorphic(make_pattern("K", {3}), make_pattern("P", {2})));
  EXPECT_TRUE(is_isomorphic(line_graph(make_pattern(PatternKind::barbed_wire, {2})), make_pattern(PatternKind::collar, {2})));
  EXPECT_FALSE(is_isomorphic(make_pattern("C", {6}), disjoint_union(make_pattern("K", {3}), make_pattern("K", {3}))));
}

TEST(WedgeSets, MatchEdgInj) {
  auto g = make_pattern("K", {4});
  auto sets = count_wedge_sets(g, 3);
  EXPECT_EQ(sets[0], 1);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(sets[static_cast<std::size_t>(k)] * power(2, static_cast<unsigned>(k)) * factorial(k),
              count_edginj(make_pattern("mP2", {k}), g, Caps::for_pipelines()))
        << k;
  }
}
