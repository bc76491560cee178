#include "edginj/reductions.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace edginj;

namespace {

Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

const std::vector<bool> kC6Left{true, false, true, false, true, false};

}  // namespace

TEST(Bipartite, SideInference) {
  EXPECT_TRUE(is_bipartite(make_pattern("C", {6})));
  EXPECT_FALSE(is_bipartite(make_pattern("C", {5})));
  // the star center has degree 3 and must be on the left
  auto left = infer_left_side(make_pattern("S", {3}));
  EXPECT_TRUE(left[0]);
  EXPECT_FALSE(left[1]);
  // C_4: either side has two right vertices sharing both neighbors
  EXPECT_THROW(infer_left_side(make_pattern("C", {4})), DomainError);
}

TEST(BuildGr, Examples) {
  const Graph ax = make_pattern("P", {1});
  const Graph g0 = build_Gr(ax, {true, false}, 0);
  EXPECT_TRUE(is_isomorphic(g0, make_pattern("P", {2})));
  EXPECT_EQ(g0.degree(0), 1);
  const Graph g2 = build_Gr(ax, {true, false}, 2);
  EXPECT_EQ(g2.num_vertices(), 5);
  EXPECT_EQ(g2.degree(0), 3);
  // two left vertices sharing two right neighbors
  EXPECT_THROW(build_Gr(make_pattern("C", {4}), {true, false, true, false}, 0), DomainError);
  // a right vertex of degree 3
  EXPECT_THROW(build_Gr(make_pattern("S", {3}), {false, true, true, true}, 0), DomainError);
}

TEST(Wedges, AlphaBase) {
  auto alpha = wedge_alpha_oracle(make_pattern("C", {6}), kC6Left, 0);
  EXPECT_EQ(alpha.at({0, 0}), 1);
}

TEST(Wedges, AlphaK0IsScaledMatchingCount) {
  const Graph c6 = make_pattern("C", {6});
  auto alpha = wedge_alpha_oracle(c6, kC6Left, 3);
  const int want[] = {1, 6, 9, 2};
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(alpha.at({k, 0}), power(2, static_cast<unsigned>(k)) * factorial(k) * want[k]) << k;
  }
}

TEST(Wedges, BetaIdentity) {
  const Graph c6 = make_pattern("C", {6});
  for (int k = 1; k <= 2; ++k) {
    const auto stats = wedge_stats(c6, kC6Left, k, 3);
    for (const auto& [r, beta] : stats.beta) EXPECT_EQ(beta_from_alpha(stats.alpha, k, 3, r), beta) << k << " " << r;
  }
}

TEST(Wedges, Pipeline) {
  const Graph c6 = make_pattern("C", {6});
  const int want[] = {1, 6, 9, 2};
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(count_matchings_via_wedges(c6, k), want[k]) << k;
  const Graph star = make_pattern("S", {3});
  EXPECT_EQ(count_matchings_via_wedges(star, 1), 3);
  EXPECT_EQ(count_matchings_via_wedges(star, 2), 0);
}

TEST(Apex, Examples) {
  const Graph c4 = make_pattern("C", {4});
  EXPECT_EQ(count_edginj(make_pattern("mK3", {2}), add_apex(c4), Caps::for_pipelines()), 144);
  EXPECT_EQ(count_matchings_via_apex(c4, 2), 2);
  EXPECT_EQ(count_matchings_via_apex(c4, 1), 4);
  EXPECT_EQ(count_matchings_via_apex(c4, 0), 1);
  EXPECT_THROW(count_matchings_via_apex(make_pattern("C", {5}), 1), DomainError);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(count_matchings_via_apex(make_pattern("C", {6}), k), count_matchings(make_pattern("C", {6}), k, false));
  }
}

TEST(Star, Examples) {
  const Graph c6 = make_pattern("C", {6});
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(count_matchings_via_star(c6, kC6Left, k), count_matchings(c6, k, false)) << k;
  }
  EXPECT_EQ(count_matchings_via_star(make_pattern("P", {1}), 1), 1);
  EXPECT_EQ(count_matchings_via_star(make_pattern("P", {1}), 0), 1);
  const Graph host = build_star_host(c6, kC6Left);
  for (const Edge& e : host.edges()) EXPECT_NE(e.u, e.v);
}

TEST(CycleGadget, Structure) {
  const Graph k4 = make_pattern("K", {4});
  CycleGadgetLayout lay;
  const Graph gb = build_cycle_gadget(k4, 3, &lay);
  EXPECT_EQ(gb.num_vertices(), 4 * (4 + 2 * 3));
  EXPECT_EQ(lay.weighted_edges.size(), 4U);
  for (int e : lay.weighted_edges) EXPECT_EQ(gb.weight(e), 3);
  EXPECT_GE(min_weighted_edge_separation(gb, lay), 5);
}

TEST(CycleGadget, Counts) {
  EXPECT_EQ(count_simple_cycles_via_gadget(make_pattern("K", {4}), 3), 4);
  EXPECT_EQ(count_simple_cycles_via_gadget(make_pattern("C", {5}), 3), 0);
  const auto rep = count_simple_cycles_via_gadget_report(make_pattern("K", {4}), 3);
  EXPECT_EQ(rep.p.degree(), 3);
  EXPECT_EQ(rep.p_values.size(), 4U);
  EXPECT_THROW(count_simple_cycles_via_gadget(make_pattern("K", {4}), 2), DomainError);
}

TEST(CycleGadget, K4FourCycles) {
  EXPECT_EQ(count_simple_cycles_via_gadget(make_pattern("K", {4}), 4), 3);
}

TEST(WeightedCycles, Examples) {
  Graph k4(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.add_weighted_edge(u, v, (u == 0 && v == 1) ? 2 : 1);
  }
  EXPECT_EQ(weighted_edge_disjoint_cycles(k4, 3), 6);
}

TEST(Unweight, GadgetWalks) {
  for (int j = 1; j <= 3; ++j) {
    const Graph gj = make_pattern(PatternKind::gadget_g, {j});
    const auto trails = trails_between(gj, gj.anchor("a"), gj.anchor("b"));
    EXPECT_EQ(static_cast<int>(trails.size()), j);
    for (const auto& t : trails) EXPECT_EQ(static_cast<int>(t.size()), 2 * j - 1);
  }
}

TEST(Unweight, LongestClosedTrail) {
  EXPECT_EQ(longest_closed_trail(make_pattern(PatternKind::gadget_g, {1})), 0);
  EXPECT_EQ(longest_closed_trail(make_pattern(PatternKind::gadget_g, {2})), 6);
  EXPECT_EQ(longest_closed_trail(make_pattern(PatternKind::gadget_g, {3})), 10);
  EXPECT_EQ(longest_closed_trail(make_pattern("K", {4})), 4);
}

TEST(Unweight, Identity) {
  Graph diamond(4);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}) diamond.add_weighted_edge(a, b, 1);
  const auto rep = unweight_cycles(diamond, 4);
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.cycle_length, 12);
  EXPECT_EQ(*rep.rhs, 3 * count_edginj(make_pattern("C", {4}), underlying_graph(diamond)));

  Graph heavy(4);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}) heavy.add_weighted_edge(a, b, a == 0 ? 2 : 1);
  EXPECT_TRUE(unweight_cycles(heavy, 4).holds());
}

TEST(Unweight, Preconditions) {
  EXPECT_THROW(unweight_cycles(make_pattern("C", {4}), 4), DomainError);
  Graph w(4);
  for (int i = 0; i < 4; ++i) w.add_weighted_edge(i, (i + 1) % 4, 1);
  EXPECT_THROW(unweight_cycles(w, 3), DomainError);
}

TEST(EcPaths, Examples) {
  EXPECT_EQ(ec_cycles_via_paths(make_pattern("K", {4}), 3), 4);
  EXPECT_EQ(ec_cycles_via_paths(make_pattern("K", {4}), 4), 3);
  EXPECT_EQ(ec_cycles_via_paths(make_pattern("C", {5}), 5), 1);
  EXPECT_EQ(ec_cycles_via_paths(make_pattern("C", {6}), 3), 0);
  EXPECT_THROW(ec_cycles_via_paths(make_pattern("K", {4}), 6), DomainError);
}

TEST(EcPaths, RandomAgainstOracle) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 12; ++i) {
    Graph g(3 + i % 4);
    for (int u = 0; u < g.num_vertices(); ++u) {
      for (int v = u + 1; v < g.num_vertices(); ++v) {
        if (rng() % 3) g.add_edge(u, v);
      }
    }
    const int k = 3 + i % 3;
    EXPECT_EQ(ec_cycles_via_paths(g, k), count_edge_disjoint(g, k, WalkKind::cycle, Caps::for_pipelines())) << i;
  }
}

TEST(EcPaths, RevisitingTrailsBreakTheIdentityAtSix) {
  // closed 6-trails of the bowtie pass its center twice, so the per-vertex
  // path decomposition would see each of them twice; hence k <= 5
  Graph bowtie = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(count_edge_disjoint(bowtie, 6, WalkKind::cycle, Caps::for_pipelines()), 2);
  EXPECT_THROW(ec_cycles_via_paths(bowtie, 6), DomainError);
}
