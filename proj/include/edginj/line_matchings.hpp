#pragma once

// Perfect matchings in 3-regular line graphs: the polynomial algorithm via
// odd edge-sets of the triangle contraction, and the hardness direction
// (triangle expansion, collar substitution, base-R digit extraction).

#include "edginj/common.hpp"
#include "edginj/graph.hpp"
#include "edginj/numeric.hpp"
#include "edginj/oracles.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace edginj {

struct LineDecomposition {
  std::vector<int> matching;                   // edge ids of M in g
  std::vector<std::array<int, 3>> triangles;   // T, each sorted
  int down_vertices = 0;
  std::vector<std::pair<int, int>> down_edges; // one per M edge, same order; may repeat

  /// G_down as a simple graph; throws when contraction produced parallel edges.
  Graph down_graph() const {
    Graph g(down_vertices);
    for (const auto& [a, b] : down_edges) {
      if (g.has_edge(a, b)) throw DomainError("contracted graph has parallel edges");
      g.add_edge(a, b);
    }
    return g;
  }
};

inline bool is_regular(const Graph& g, int d) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

/// Greedy triangle removal from the lowest vertex; the rest must be a perfect
/// matching and no triangle of g may lie outside T.
inline LineDecomposition decompose_3regular_line(const Graph& g) {
  if (!is_regular(g, 3)) throw DomainError("decompose: graph is not 3-regular");
  if (g.num_vertices() < 5) throw DomainError("decompose: needs at least 5 vertices");
  const int n = g.num_vertices();
  std::vector<int> tri_of(static_cast<std::size_t>(n), -1);
  LineDecomposition d;
  for (int v = 0; v < n; ++v) {
    if (tri_of[static_cast<std::size_t>(v)] >= 0) continue;
    std::optional<std::array<int, 3>> found;
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < nb.size() && !found; ++j) {
        int a = nb[i], b = nb[j];
        if (tri_of[static_cast<std::size_t>(a)] < 0 && tri_of[static_cast<std::size_t>(b)] < 0 && g.has_edge(a, b)) {
          std::array<int, 3> t{v, a, b};
          std::sort(t.begin(), t.end());
          found = t;
        }
      }
    }
    if (!found) throw DomainError("decompose: vertex " + std::to_string(v) + " lies in no free triangle");
    for (int x : *found) tri_of[static_cast<std::size_t>(x)] = static_cast<int>(d.triangles.size());
    d.triangles.push_back(*found);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    int a = tri_of[static_cast<std::size_t>(ed.u)], b = tri_of[static_cast<std::size_t>(ed.v)];
    if (a == b) continue;
    d.matching.push_back(e);
    d.down_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  // Every vertex has degree 3 and two triangle edges, so M is perfect. All
  // triangles must be in T for the decomposition to be the unique one.
  for (const Edge& e : g.edges()) {
    for (int w : g.neighbors(e.u)) {
      if (w != e.v && g.has_edge(w, e.v)) {
        int t = tri_of[static_cast<std::size_t>(e.u)];
        if (tri_of[static_cast<std::size_t>(e.v)] != t || tri_of[static_cast<std::size_t>(w)] != t) {
          throw DomainError("decompose: triangle outside the packing, not a line graph");
        }
      }
    }
  }
  d.down_vertices = static_cast<int>(d.triangles.size());
  return d;
}

/// Odd edge-sets of a multigraph on n vertices: solutions of Bx = 1 over GF(2).
inline Count count_odd_edge_sets(int n, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<bool>> a(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(m), false));
  for (int e = 0; e < m; ++e) {
    a[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].first)][static_cast<std::size_t>(e)] = true;
    a[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].second)][static_cast<std::size_t>(e)] = true;
  }
  return gf2_solution_count(a, std::vector<bool>(static_cast<std::size_t>(n), true), m);
}

inline Count count_odd_edge_sets(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return count_odd_edge_sets(g.num_vertices(), edges);
}

inline Count count_perfmatch_3regular_line(const Graph& g, const Caps& caps = default_caps()) {
  if (!is_regular(g, 3)) throw DomainError("perfmatch: graph is not 3-regular");
  if (g.num_vertices() < 5) return count_perfect_matchings(g, caps);
  const LineDecomposition d = decompose_3regular_line(g);
  return count_odd_edge_sets(d.down_vertices, d.down_edges);
}

/// Vertex v becomes the triangle 3v, 3v+1, 3v+2; the i-th incident edge of v
/// attaches at 3v+i. Edge ids 0..|E(g)|-1 are the matching M (same order as
/// g's edges), the triangle edges follow.
inline Graph triangle_expand(const Graph& g) {
  if (!is_regular(g, 3)) throw DomainError("triangle_expand: graph is not 3-regular");
  Graph out(3 * g.num_vertices());
  std::vector<std::array<int, 2>> port(static_cast<std::size_t>(g.num_edges()));
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const Edge& e = g.edge(inc[i].edge);
      port[static_cast<std::size_t>(inc[i].edge)][e.u == v ? 0 : 1] = 3 * v + static_cast<int>(i);
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) out.add_edge(port[static_cast<std::size_t>(e)][0], port[static_cast<std::size_t>(e)][1]);
  for (int v = 0; v < g.num_vertices(); ++v) {
    out.add_edge(3 * v, 3 * v + 1);
    out.add_edge(3 * v + 1, 3 * v + 2);
    out.add_edge(3 * v, 3 * v + 2);
  }
  return out;
}

/// Replaces each edge uv of `matching` (edge ids of gp) by a fresh collar of
/// length ell with ends u and v.
inline Graph replace_matching_with_collars(const Graph& gp, const std::vector<int>& matching, int ell) {
  if (ell < 1) throw DomainError("collar length must be at least 1");
  std::vector<bool> in_m(static_cast<std::size_t>(gp.num_edges()), false);
  std::vector<bool> touched(static_cast<std::size_t>(gp.num_vertices()), false);
  for (int e : matching) {
    if (e < 0 || e >= gp.num_edges() || in_m[static_cast<std::size_t>(e)]) throw DomainError("invalid matching edge id");
    const Edge& ed = gp.edge(e);
    if (touched[static_cast<std::size_t>(ed.u)] || touched[static_cast<std::size_t>(ed.v)]) {
      throw DomainError("edge set is not a matching");
    }
    touched[static_cast<std::size_t>(ed.u)] = touched[static_cast<std::size_t>(ed.v)] = true;
    in_m[static_cast<std::size_t>(e)] = true;
  }
  Graph b(gp.num_vertices());
  for (int e = 0; e < gp.num_edges(); ++e) {
    if (!in_m[static_cast<std::size_t>(e)]) b.add_edge(gp.edge(e).u, gp.edge(e).v);
  }
  for (int e : matching) {
    int prev = gp.edge(e).u;
    for (int i = 0; i < ell; ++i) {
      std::array<int, 4> k4;
      for (int& x : k4) x = b.add_vertex();
      detail::add_clique(b, {k4[0], k4[1], k4[2], k4[3]});
      b.add_edge(prev, k4[0]);  // a_i
      prev = k4[1];             // b_i
    }
    b.add_edge(prev, gp.edge(e).v);
  }
  return b;
}

/// Base-R digits of total, index t holding the coefficient of R^{D-t}.
inline std::vector<Count> extract_digits_base_R(Count total, const Count& r, int d) {
  if (r < 2) throw DomainError("digit base must be at least 2");
  if (d < 0) throw DomainError("digit count must be non-negative");
  if (total < 0 || total >= power(r, static_cast<unsigned>(d + 1))) {
    throw DomainError("total does not fit in " + std::to_string(d + 1) + " base-R digits");
  }
  std::vector<Count> digits(static_cast<std::size_t>(d + 1));
  for (int t = d; t >= 0; --t) {
    digits[static_cast<std::size_t>(t)] = total % r;
    total /= r;
  }
  return digits;
}

struct LineReductionReport {
  int ell = 0;
  Count base;                  // R = 3^ell
  Count total;                 // #PerfMatch(B)
  std::vector<Count> digits;   // m_0..m_|M|
  Count value;                 // m_{|V(g)|/2}
  int b_vertices = 0;
  int b_max_degree = 0;
};

/// #PerfMatch(g) for 3-regular g through G' = triangle_expand(g) and B with
/// collars of length ell. The digits m_t are checked against R = 3^ell with
/// the per-t oracle first; ell = 0 picks the least safe length.
inline LineReductionReport perfmatch_via_line_reduction_report(const Graph& g, int ell,
                                                               const Caps& caps = default_caps()) {
  const Graph gp = triangle_expand(g);
  std::vector<int> matching(static_cast<std::size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) matching[static_cast<std::size_t>(e)] = e;
  const std::vector<Count> m = count_perfect_matchings_by_marked(gp, matching, caps);
  Count largest = 0;
  for (const Count& x : m) largest = std::max(largest, x);
  if (ell == 0) {
    ell = 1;
    while (power(3, static_cast<unsigned>(ell)) <= largest) ++ell;
  }
  LineReductionReport rep;
  rep.ell = ell;
  rep.base = power(3, static_cast<unsigned>(ell));
  if (largest >= rep.base) {
    throw IdentityViolation("digit overflow: some m_t = " + largest.str() + " is not below R = " + rep.base.str());
  }
  const Graph b = replace_matching_with_collars(gp, matching, ell);
  rep.b_vertices = b.num_vertices();
  for (int v = 0; v < b.num_vertices(); ++v) rep.b_max_degree = std::max(rep.b_max_degree, b.degree(v));
  rep.total = count_perfect_matchings(b, caps);
  rep.digits = extract_digits_base_R(rep.total, rep.base, g.num_edges());
  rep.value = rep.digits[static_cast<std::size_t>(g.num_vertices() / 2)];
  return rep;
}

inline Count perfmatch_via_line_reduction(const Graph& g, int ell, const Caps& caps = default_caps()) {
  return perfmatch_via_line_reduction_report(g, ell, caps).value;
}

}  // namespace edginj
