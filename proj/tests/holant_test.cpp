#include "edginj/holant.hpp"
#include "edginj/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace edginj;

namespace {

Graph colored(int n, std::vector<std::tuple<int, int, int>> edges, int k = 0) {
  Graph g(n);
  int top = 0;
  for (auto [a, b, c] : edges) {
    g.add_colored_edge(a, b, c);
    top = std::max(top, c);
  }
  g.set_num_colors(std::max(k, top));
  return g;
}

Graph c4_1212() { return colored(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 2}}); }
Graph c4_1122() { return colored(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 0, 2}}); }

}  // namespace

TEST(ColHolant, Examples) {
  SignatureGraph edge;
  edge.add_vertex();
  edge.add_vertex();
  edge.add_edge(0, 1, 1);
  EXPECT_EQ(col_holant(edge), 1);

  SignatureGraph tri;
  for (int v = 0; v < 3; ++v) tri.add_vertex();
  tri.add_edge(0, 1, 1);
  tri.add_edge(1, 2, 2);
  tri.add_edge(2, 0, 3);
  EXPECT_EQ(col_holant(tri), 0);
}

TEST(ColHolant, MatchHolant) {
  EXPECT_EQ(col_holant(build_match_holant(c4_1212())), 0);
  EXPECT_EQ(col_holant(build_match_holant(c4_1122())), 2);
  EXPECT_EQ(col_holant(build_match_holant(Graph(3))), 1);
  EXPECT_EQ(col_holant(build_match_holant(colored(2, {{0, 1, 1}}))), 1);
  // a declared color with no edges
  EXPECT_EQ(col_holant(build_match_holant(colored(3, {{0, 1, 1}}, 2))), 0);
}

TEST(ColHolant, RandomAgainstOracle) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const int k = 1 + i % 3;
    Graph g(6);
    for (int u = 0; u < 6; ++u) {
      for (int v = u + 1; v < 6; ++v) {
        if (rng() % 3 == 0 && g.num_edges() < 8) g.add_colored_edge(u, v, 1 + static_cast<int>(rng() % static_cast<unsigned>(k)));
      }
    }
    g.set_num_colors(k);
    const Count want = count_matchings(g, k, true);
    EXPECT_EQ(col_holant(build_match_holant(g)), Rational(want));
    EXPECT_EQ(col_holant(build_omega_bip(g)), Rational(want));
    EXPECT_EQ(colmatch_via_subdivision(g, k), want);
    EXPECT_EQ(colmatch_via_uncolored(g), want);
  }
}

TEST(ColHolant, StripSignatures) {
  const Graph g = c4_1122();
  EXPECT_EQ(strip_signatures(build_match_holant(g)), g);
}

TEST(OmegaBip, SingleEdge) {
  auto omega = build_omega_bip(colored(2, {{0, 1, 1}}));
  EXPECT_EQ(omega.num_vertices(), 3);
  EXPECT_EQ(omega.num_edges(), 2);
  EXPECT_EQ(col_holant(omega), 1);
}

TEST(Gamma, SignatureValuesAtMThree) {
  std::vector<std::pair<int, int>> ports;
  for (int a = 0; a < 3; ++a) {
    ports.emplace_back(bip_color(1, 1), a);
    ports.emplace_back(bip_color(1, 2), a);
  }
  auto g2 = build_gamma(2, 1, ports);
  auto g1 = build_gamma(1, 1, ports);
  // ports 0 and 1 share annotation 0; ports 0 and 3 do not
  std::vector<bool> same(6, false), diff(6, false);
  same[0] = same[1] = true;
  diff[0] = diff[3] = true;
  EXPECT_EQ(col_sig(g2, same), 2);
  EXPECT_EQ(col_sig(g2, diff), 3);
  EXPECT_EQ(col_sig(g1, same), 1);
  EXPECT_EQ(col_sig(g1, diff), 1);
  // two ports of the same color are never colorful
  std::vector<bool> clash(6, false);
  clash[0] = clash[2] = true;
  EXPECT_EQ(col_sig(g2, clash), 0);
}

TEST(Gamma, LinearCombinationGivesAnnotationEquality) {
  for (int m = 1; m <= 4; ++m) {
    std::vector<std::pair<int, int>> ports;
    for (int a = 0; a < m; ++a) {
      ports.emplace_back(bip_color(2, 1), a);
      ports.emplace_back(bip_color(2, 2), a);
    }
    auto t1 = col_sig_table(build_gamma(1, 2, ports));
    auto t2 = col_sig_table(build_gamma(2, 2, ports));
    std::vector<std::optional<int>> ann;
    for (const auto& p : ports) ann.push_back(p.second);
    for (std::size_t mask = 0; mask < t1.values().size(); ++mask) {
      const Rational f = Signature::annotation_eq().evaluate(mask, static_cast<int>(ports.size()), ann);
      EXPECT_EQ(gamma_coefficient(1, m) * t1.values()[mask] + gamma_coefficient(2, m) * t2.values()[mask], f) << m << " " << mask;
    }
  }
}

TEST(Insert, Errors) {
  SignatureGraph omega = build_match_holant(colored(3, {{0, 1, 1}, {1, 2, 2}}));
  SignatureGraph gate;
  gate.add_vertex();
  gate.add_dangling(0, 1);
  EXPECT_THROW(insert_matchgate(omega, 1, gate, omega.incident(1)), DomainError);  // arity
  gate.add_dangling(0, 3);
  EXPECT_THROW(insert_matchgate(omega, 1, gate, omega.incident(1)), DomainError);  // color
}

TEST(Insert, PreservesHolantWithMatchingGate) {
  const Graph g = c4_1122();
  const SignatureGraph omega = build_match_holant(g);
  // single HW<=1 vertex carrying vertex 0's edges
  SignatureGraph gate;
  gate.add_vertex();
  for (int e : omega.incident(0)) gate.add_dangling(0, omega.edge(e).color);
  EXPECT_EQ(col_holant(insert_matchgate(omega, 0, gate, omega.incident(0))), col_holant(omega));
}

TEST(Combined, Examples) {
  const SignatureGraph omega = build_match_holant(c4_1122());
  auto none = expand_combined(omega, {});
  ASSERT_EQ(none.size(), 1U);
  EXPECT_EQ(none[0].first, 1);

  const int arity = static_cast<int>(omega.incident(0).size());
  std::vector<Rational> zero(std::size_t(1) << arity, 0);
  CombinedTerm term{0, {{Rational(1), Signature::table(signature_table(omega, 0))}, {Rational(0), Signature::table(zero)}}};
  auto two = expand_combined(omega, {term});
  ASSERT_EQ(two.size(), 2U);
  EXPECT_EQ(two[0].first, 1);
  EXPECT_EQ(two[1].first, 0);
  Rational sum = 0;
  for (const auto& [c, gr] : two) sum += c * col_holant(gr);
  EXPECT_EQ(sum, col_holant(omega));
}

TEST(Subdivision, Examples) {
  EXPECT_EQ(colmatch_via_subdivision(colored(2, {{0, 1, 1}}), 1), 1);
  EXPECT_EQ(colmatch_via_subdivision(c4_1212(), 2), count_matchings(c4_1212(), 2, true));
  EXPECT_EQ(colmatch_via_subdivision(c4_1122(), 2), 2);
  std::vector<SubdivisionQuery> queries;
  colmatch_via_subdivision(c4_1122(), 2, &queries);
  EXPECT_FALSE(queries.empty());
}

TEST(Uncolored, Examples) {
  EXPECT_EQ(colmatch_via_uncolored(colored(4, {{0, 1, 1}, {2, 3, 1}, {1, 2, 1}})), 3);
  EXPECT_EQ(colmatch_via_uncolored(c4_1212()), count_matchings(c4_1212(), 2, true));
  EXPECT_EQ(colmatch_via_uncolored(colored(3, {{0, 1, 1}}, 2)), 0);
}

TEST(Format, SignatureGraphRoundTrip) {
  const SignatureGraph omega = build_omega_bip(c4_1122());
  const std::string text = serialize_signature_graph(omega);
  EXPECT_EQ(serialize_signature_graph(parse_signature_graph(text)), text);
  EXPECT_EQ(col_holant(parse_signature_graph(text)), 2);
}
