#include "edginj/line_matchings.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace edginj;

namespace {

Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

Graph prism() { return from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}); }

Graph subdivided_line(const Graph& cubic) { return line_graph(subdivide(cubic, 1)); }

}  // namespace

TEST(Decompose, SubdividedK4) {
  const auto d = decompose_3regular_line(subdivided_line(make_pattern("K", {4})));
  EXPECT_EQ(d.triangles.size(), 4U);
  EXPECT_EQ(d.matching.size(), 6U);
  EXPECT_TRUE(is_isomorphic(d.down_graph(), make_pattern("K", {4})));
}

TEST(Decompose, Rejects) {
  EXPECT_THROW(decompose_3regular_line(make_pattern("K", {4})), DomainError);
  EXPECT_THROW(decompose_3regular_line(make_pattern("C", {6})), DomainError);
  EXPECT_THROW(decompose_3regular_line(make_pattern("Kab", {3, 3})), DomainError);
}

TEST(Decompose, ParallelEdgesAfterContraction) {
  // the line graph of a 3-regular multigraph-free input can still contract
  // to parallel edges; down_edges keeps them, down_graph refuses
  Graph g = triangle_expand(prism());
  const auto d = decompose_3regular_line(g);
  EXPECT_NO_THROW(d.down_graph());
  EXPECT_EQ(d.down_edges.size(), 9U);
}

TEST(OddSets, Examples) {
  EXPECT_EQ(count_odd_edge_sets(make_pattern("K", {4})), 8);
  EXPECT_EQ(count_odd_edge_sets(make_pattern("P", {1})), 1);
  EXPECT_EQ(count_odd_edge_sets(Graph(1)), 0);
  EXPECT_EQ(count_odd_edge_sets(disjoint_union(make_pattern("K", {4}), Graph(1))), 0);
  // multigraph: two parallel edges between two vertices
  EXPECT_EQ(count_odd_edge_sets(2, {{0, 1}, {0, 1}}), 2);
}

TEST(OddSets, RandomAgainstEnumeration) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 40; ++i) {
    Graph g(2 + i % 6);
    for (int u = 0; u < g.num_vertices(); ++u) {
      for (int v = u + 1; v < g.num_vertices(); ++v) {
        if (rng() % 2) g.add_edge(u, v);
      }
    }
    EXPECT_EQ(count_odd_edge_sets(g), count_odd_edge_sets_enum(g));
  }
}

TEST(PerfMatchLine, Examples) {
  EXPECT_EQ(count_perfmatch_3regular_line(subdivided_line(make_pattern("K", {4}))), 8);
  EXPECT_EQ(count_perfmatch_3regular_line(make_pattern("K", {4})), 3);  // brute force below 5 vertices
  for (const Graph& cubic : {make_pattern("Kab", {3, 3}), prism()}) {
    const Graph l = subdivided_line(cubic);
    EXPECT_EQ(count_perfmatch_3regular_line(l), count_perfect_matchings(l));
  }
  EXPECT_THROW(count_perfmatch_3regular_line(make_pattern("C", {6})), DomainError);
}

TEST(TriangleExpand, K4) {
  const Graph gp = triangle_expand(make_pattern("K", {4}));
  EXPECT_EQ(gp.num_vertices(), 12);
  EXPECT_EQ(gp.num_edges(), 18);
  const auto d = decompose_3regular_line(gp);
  EXPECT_TRUE(is_isomorphic(d.down_graph(), make_pattern("K", {4})));
  // the first |E(K_4)| edges form M
  std::vector<int> m(6);
  for (int e = 0; e < 6; ++e) m[static_cast<std::size_t>(e)] = e;
  auto sorted = d.matching;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, m);
}

TEST(TriangleExpand, PerCardinality) {
  for (const Graph& g : {make_pattern("K", {4}), make_pattern("Kab", {3, 3}), prism()}) {
    const Graph gp = triangle_expand(g);
    std::vector<int> m(static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) m[static_cast<std::size_t>(e)] = e;
    const auto by_t = count_perfect_matchings_by_marked(gp, m);
    const auto odd = count_odd_edge_sets_by_size(g);
    for (std::size_t t = 0; t < odd.size(); ++t) EXPECT_EQ(by_t[t], odd[t]) << t;
    EXPECT_EQ(by_t[static_cast<std::size_t>(g.num_vertices() / 2)], count_perfect_matchings(g));
  }
}

TEST(Collars, SingleEdge) {
  const Graph k2 = make_pattern("P", {1});
  const Graph b = replace_matching_with_collars(k2, {0}, 1);
  EXPECT_EQ(b.num_vertices(), 6);
  EXPECT_TRUE(is_isomorphic(b, make_pattern(PatternKind::collar, {1})));
  EXPECT_THROW(replace_matching_with_collars(make_pattern("P", {2}), {0, 1}, 1), DomainError);
  EXPECT_THROW(replace_matching_with_collars(k2, {0}, 0), DomainError);
}

TEST(Digits, Examples) {
  EXPECT_EQ(extract_digits_base_R(23, 9, 1), (std::vector<Count>{2, 5}));
  EXPECT_EQ(extract_digits_base_R(0, 9, 3), (std::vector<Count>{0, 0, 0, 0}));
  EXPECT_THROW(extract_digits_base_R(81, 9, 1), DomainError);
  EXPECT_THROW(extract_digits_base_R(5, 1, 1), DomainError);
}

TEST(Digits, RoundTrip) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 50; ++i) {
    const Count r = 2 + rng() % 50;
    std::vector<Count> digits(1 + rng() % 6);
    Count total = 0;
    for (auto& d : digits) {
      d = Count(rng() % 1000) % r;
      total = total * r + d;
    }
    EXPECT_EQ(extract_digits_base_R(total, r, static_cast<int>(digits.size()) - 1), digits);
  }
}

TEST(LineReduction, Pipelines) {
  const auto k4 = perfmatch_via_line_reduction_report(make_pattern("K", {4}), 0);
  EXPECT_EQ(k4.value, 3);
  EXPECT_EQ(k4.ell, 2);
  EXPECT_LE(k4.b_max_degree, 4);
  const auto k33 = perfmatch_via_line_reduction_report(make_pattern("Kab", {3, 3}), 0);
  EXPECT_EQ(k33.value, 6);
  EXPECT_EQ(k33.ell, 3);
  EXPECT_EQ(perfmatch_via_line_reduction(make_pattern("K", {4}), 3), 3);
  EXPECT_EQ(perfmatch_via_line_reduction(prism(), 0), count_perfect_matchings(prism()));
}

TEST(LineReduction, OverflowIsReported) {
  EXPECT_THROW(perfmatch_via_line_reduction(make_pattern("K", {4}), 1), IdentityViolation);
  EXPECT_THROW(perfmatch_via_line_reduction(make_pattern("Kab", {3, 3}), 2), IdentityViolation);
}
