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

}  // namespace

TEST(Patterns, Sizes) {
  auto w3 = make_pattern(PatternKind::windmill, {3});
  EXPECT_EQ(w3.num_vertices(), 7);
  EXPECT_EQ(w3.num_edges(), 9);
  auto ss2 = make_pattern(PatternKind::subdivided_star, {2});
  EXPECT_EQ(ss2.num_vertices(), 5);
  EXPECT_EQ(ss2.num_edges(), 4);
  auto collar = make_pattern(PatternKind::collar, {2});
  EXPECT_EQ(collar.num_vertices(), 10);
  EXPECT_EQ(collar.num_edges(), 15);
  EXPECT_EQ(make_pattern("P", {3}).num_edges(), 3);
  EXPECT_EQ(make_pattern("Kab", {2, 3}).num_edges(), 6);
  EXPECT_EQ(make_pattern("mP2", {2}).num_vertices(), 6);
}

TEST(Patterns, RejectsBadParams) {
  EXPECT_THROW(make_pattern("C", {2}), DomainError);
  EXPECT_THROW(make_pattern("P", {}), DomainError);
  EXPECT_THROW(make_pattern("nope", {1}), DomainError);
}

TEST(Patterns, GadgetAnchors) {
  auto g2 = make_pattern(PatternKind::gadget_g, {2});
  EXPECT_EQ(g2.anchor("a"), g2.anchor("a2"));
  EXPECT_EQ(g2.anchor("b"), g2.anchor("b2"));
  EXPECT_NO_THROW(g2.edge_mark("e1"));
  EXPECT_THROW(g2.anchor("zz"), DomainError);
}

TEST(LineGraph, Examples) {
  EXPECT_TRUE(is_isomorphic(line_graph(make_pattern("P", {2})), make_pattern("P", {1})));
  EXPECT_TRUE(is_isomorphic(line_graph(make_pattern("C", {4})), make_pattern("C", {4})));
  auto lk4 = line_graph(make_pattern("K", {4}));
  EXPECT_EQ(lk4.num_vertices(), 6);
  EXPECT_EQ(lk4.num_edges(), 12);
}

TEST(Subdivide, Examples) {
  EXPECT_TRUE(is_isomorphic(subdivide(make_pattern("P", {1}), 3), make_pattern("P", {4})));
  EXPECT_TRUE(is_isomorphic(subdivide(make_pattern("K", {3}), 3), make_pattern("C", {12})));
  EXPECT_EQ(subdivide(make_pattern("K", {4}), 0), make_pattern("K", {4}));
}

TEST(Quotient, Examples) {
  auto p2 = make_pattern("P", {2});  // 0-1-2
  auto q = quotient(p2, Partition::singletons(3));
  EXPECT_FALSE(q.degenerate);
  EXPECT_TRUE(q.edge_injective);
  EXPECT_EQ(q.graph.num_edges(), 2);

  auto merged = quotient(p2, Partition(3, {{0, 2}, {1}}));
  EXPECT_FALSE(merged.degenerate);
  EXPECT_FALSE(merged.edge_injective);

  auto loop = quotient(make_pattern("P", {1}), Partition(2, {{0, 1}}));
  EXPECT_TRUE(loop.degenerate);
}

TEST(Partition, BellNumbers) {
  const int bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 0; n <= 6; ++n) {
    int count = 0;
    for_each_set_partition(n, [&](const std::vector<int>&, int) { ++count; });
    EXPECT_EQ(count, bell[n]) << n;
  }
  EXPECT_THROW(Partition(3, {{0, 1}, {1, 2}}), DomainError);
  EXPECT_THROW(Partition(3, {{0, 1}}), DomainError);
}

TEST(VertexCover, ExactAndWeak) {
  EXPECT_EQ(vertex_cover_number(make_pattern("K", {4}), CoverMode::exact), 3);
  EXPECT_EQ(vertex_cover_number(make_pattern("C", {5}), CoverMode::exact), 3);
  EXPECT_EQ(vertex_cover_number(make_pattern("mK2", {3}), CoverMode::exact), 3);
  EXPECT_EQ(vertex_cover_number(make_pattern("mK2", {3}), CoverMode::weak), 0);
  EXPECT_EQ(vertex_cover_number(make_pattern("mP2", {3}), CoverMode::weak), 3);
  EXPECT_EQ(vertex_cover_number(make_pattern("W", {2}), CoverMode::weak), 3);
  EXPECT_TRUE(is_vertex_cover(make_pattern("S", {4}), min_vertex_cover(make_pattern("S", {4}))));
}

TEST(VertexCover, MatchesBruteForce) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(rng, 1 + i % 8, 0.4);
    const auto cover = min_vertex_cover(g);
    EXPECT_TRUE(is_vertex_cover(g, cover));
    int best = g.num_vertices();
    for (int mask = 0; mask < (1 << g.num_vertices()); ++mask) {
      std::vector<int> set;
      for (int v = 0; v < g.num_vertices(); ++v) {
        if (mask >> v & 1) set.push_back(v);
      }
      if (is_vertex_cover(g, set)) best = std::min(best, static_cast<int>(set.size()));
    }
    EXPECT_EQ(static_cast<int>(cover.size()), best);
  }
}

TEST(Format, ParseExamples) {
  auto k2 = parse_graph("v 2\ne 0 1");
  EXPECT_EQ(k2, make_pattern("P", {1}));
  auto colored = parse_graph("v 3\ne 0 1 c=1\ne 1 2 c=2\n");
  EXPECT_TRUE(colored.is_colored());
  EXPECT_EQ(colored.num_colors(), 2);
  EXPECT_EQ(colored.color(colored.edge_id(1, 2)), 2);
  auto weighted = parse_graph("# comment\nv 2\ne 1 0 w=5\n");
  EXPECT_EQ(weighted.weight(0), 5);
}

TEST(Format, Errors) {
  EXPECT_THROW(parse_graph("v 2\ne 0 1\ne 1 0\n"), ParseError);
  EXPECT_THROW(parse_graph("e 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\ne 0 2\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\ne 0 0\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\ne 0 1 c=0\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\ne 0 1 x=3\n"), ParseError);
  EXPECT_THROW(parse_graph("v two\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(Format, DeclaredColorCount) {
  auto g = parse_graph("v 2\nk 3\ne 0 1 c=1\n");
  EXPECT_EQ(g.num_colors(), 3);
  EXPECT_EQ(serialize_graph(g), "v 2\nk 3\ne 0 1 c=1\n");
}

TEST(Format, SerializeSortsEdges) {
  auto g = parse_graph("v 3\ne 2 1\ne 1 0\n");
  EXPECT_EQ(serialize_graph(g), "v 3\ne 0 1\ne 1 2\n");
}

TEST(Format, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(rng, 1 + i % 7, 0.5);
    const std::string text = serialize_graph(g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);
    EXPECT_EQ(parse_graph(text), parse_graph(serialize_graph(parse_graph(text))));
  }
  for (const std::string kind : {"collar", "barbed", "W", "SS"}) {
    const std::string text = serialize_graph(make_pattern(kind, {2}));
    EXPECT_EQ(serialize_graph(parse_graph(text)), text) << kind;
  }
}

TEST(Subgraphs, InducedAndRemoval) {
  auto k4 = make_pattern("K", {4});
  auto k3 = remove_vertices(k4, {0});
  EXPECT_EQ(k3.num_vertices(), 3);
  EXPECT_EQ(k3.num_edges(), 3);
  auto comps = connected_components(disjoint_union(k3, k3));
  EXPECT_NE(comps[0], comps[3]);
  EXPECT_EQ(comps[0], comps[2]);
}
