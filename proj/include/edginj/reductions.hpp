#pragma once

// Executable reduction pipelines with their counting identities: wedge
// packings (G^r and moment recovery), the apex and subdivided-star matching
// reductions, weighted-cycle gadgets, weight removal and edge-disjoint cycles
// via paths.

#include "edginj/common.hpp"
#include "edginj/graph.hpp"
#include "edginj/numeric.hpp"
#include "edginj/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace edginj {

// ---------------------------------------------------------------------------
// Bipartite inputs

/// Chooses the left side per component: the side containing the smallest
/// vertex unless that violates the right-side conditions (degree <= 2, two
/// left vertices share at most one neighbor), in which case the other side.
inline std::vector<bool> infer_left_side(const Graph& g);

namespace detail {

inline void check_bipartite_conditions(const Graph& g, const std::vector<bool>& left) {
  if (static_cast<int>(left.size()) != g.num_vertices()) throw DomainError("side mask has wrong size");
  for (const Edge& e : g.edges()) {
    if (left[static_cast<std::size_t>(e.u)] == left[static_cast<std::size_t>(e.v)]) {
      throw DomainError("graph is not bipartite with the given sides");
    }
  }
  std::map<std::pair<int, int>, int> shared;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (left[static_cast<std::size_t>(v)]) continue;
    if (g.degree(v) > 2) throw DomainError("right vertex " + std::to_string(v) + " has degree above 2");
    if (g.degree(v) == 2) {
      auto nb = g.neighbors(v);
      if (++shared[{std::min(nb[0], nb[1]), std::max(nb[0], nb[1])}] > 1) {
        throw DomainError("two left vertices share more than one neighbor");
      }
    }
  }
}

inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace detail

inline bool is_bipartite(const Graph& g) { return detail::two_coloring(g).has_value(); }

inline std::vector<bool> infer_left_side(const Graph& g) {
  auto coloring = detail::two_coloring(g);
  if (!coloring) throw DomainError("graph is not bipartite");
  int ncomp = 0;
  const std::vector<int> comp = connected_components(g, &ncomp);
  std::vector<bool> left(static_cast<std::size_t>(g.num_vertices()));
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (comp[static_cast<std::size_t>(v)] == c) members.push_back(v);
    }
    Graph part = induced_subgraph(g, [&] {
      std::vector<bool> keep(static_cast<std::size_t>(g.num_vertices()), false);
      for (int v : members) keep[static_cast<std::size_t>(v)] = true;
      return keep;
    }());
    bool done = false;
    for (int flip = 0; flip < 2 && !done; ++flip) {
      std::vector<bool> mask(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) {
        mask[i] = ((*coloring)[static_cast<std::size_t>(members[i])] == 0) != (flip == 1);
      }
      try {
        detail::check_bipartite_conditions(part, mask);
      } catch (const DomainError&) {
        continue;
      }
      for (std::size_t i = 0; i < members.size(); ++i) left[static_cast<std::size_t>(members[i])] = mask[i];
      done = true;
    }
    if (!done) throw DomainError("no side assignment satisfies the right-side conditions");
  }
  return left;
}

// ---------------------------------------------------------------------------
// Wedge packings

/// G^r: apex 0 adjacent to every left vertex, special vertices 1..r pendant
/// at 0, left vertices next, then degree-1 right vertices; each degree-2
/// right vertex becomes an edge between its neighbors. Degree-0 right
/// vertices are dropped.
inline Graph build_Gr(const Graph& g, const std::vector<bool>& left, int r) {
  if (r < 0) throw DomainError("r must be nonnegative");
  detail::check_bipartite_conditions(g, left);
  std::vector<int> id(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 1 + r;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (left[static_cast<std::size_t>(v)]) id[static_cast<std::size_t>(v)] = next++;
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!left[static_cast<std::size_t>(v)] && g.degree(v) == 1) id[static_cast<std::size_t>(v)] = next++;
  }
  Graph out(next);
  for (int s = 1; s <= r; ++s) out.add_edge(0, s);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (left[static_cast<std::size_t>(v)]) out.add_edge(0, id[static_cast<std::size_t>(v)]);
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (left[static_cast<std::size_t>(v)]) continue;
    auto nb = g.neighbors(v);
    if (nb.size() == 1) {
      out.add_edge(id[static_cast<std::size_t>(nb[0])], id[static_cast<std::size_t>(v)]);
    } else if (nb.size() == 2) {
      int a = id[static_cast<std::size_t>(nb[0])], b = id[static_cast<std::size_t>(nb[1])];
      if (out.has_edge(a, b)) throw DomainError("G^r would have parallel edges");
      out.add_edge(a, b);
    }
  }
  return out;
}

inline Graph build_Gr(const Graph& g, int r) { return build_Gr(g, infer_left_side(g), r); }

struct WedgeStats {
  std::map<std::pair<int, int>, Count> alpha;  // (good, bad) -> count, no test wedges
  std::map<int, Count> beta;                   // r -> EdgInj(k·P_2, G^r)
};

/// α_{g,b} for all g + b <= k by classifying every edge-injective map from
/// (g+b)·P_2 into G^0 by how many of its wedge edges touch vertex 0.
inline std::map<std::pair<int, int>, Count> wedge_alpha_oracle(const Graph& g, const std::vector<bool>& left, int k,
                                                              const Caps& caps = Caps::for_pipelines()) {
  if (k < 0) throw DomainError("k must be nonnegative");
  const Graph g0 = build_Gr(g, left, 0);
  std::map<std::pair<int, int>, Count> alpha;
  alpha[{0, 0}] = 1;
  for (int size = 1; size <= k; ++size) {
    const Graph h = make_pattern(PatternKind::wedges, {size});
    for (int good = 0; good <= size; ++good) alpha[{good, size - good}] = 0;
    for_each_map(h, g0, MapKind::edginj, [&](const std::vector<int>&, const std::vector<int>& image) {
      int good = 0, bad = 0;
      for (int w = 0; w < size; ++w) {
        int at_apex = 0;
        for (int e : {image[static_cast<std::size_t>(2 * w)], image[static_cast<std::size_t>(2 * w + 1)]}) {
          if (g0.edge(e).u == 0) ++at_apex;
        }
        if (at_apex == 2) return;  // test wedge
        (at_apex == 1 ? good : bad) += 1;
      }
      alpha[{good, bad}] += 1;
    }, caps);
  }
  return alpha;
}

inline std::map<std::pair<int, int>, Count> wedge_alpha_oracle(const Graph& g, int k,
                                                              const Caps& caps = Caps::for_pipelines()) {
  return wedge_alpha_oracle(g, infer_left_side(g), k, caps);
}

/// Right-hand side of β_k(G^r) = Σ_{t+g+b=k} α_{g,b}·C(k,g+b)·(n+r-g)_{2t}.
inline Count beta_from_alpha(const std::map<std::pair<int, int>, Count>& alpha, int k, int n, int r) {
  Count total = 0;
  for (int t = 0; t <= k; ++t) {
    for (int good = 0; good + t <= k; ++good) {
      const int bad = k - t - good;
      auto it = alpha.find({good, bad});
      if (it == alpha.end() || it->second == 0) continue;
      Count ff = 1;
      for (int i = 0; i < 2 * t; ++i) ff *= n + r - good - i;
      total += it->second * binomial(k, good + bad) * ff;
    }
  }
  return total;
}

/// α by classification on G^0 and β_k(G^r) for r = 0..r_max by direct
/// enumeration, the two sides of the β identity.
inline WedgeStats wedge_stats(const Graph& g, const std::vector<bool>& left, int k, int r_max,
                              const Caps& caps = Caps::for_pipelines()) {
  WedgeStats stats;
  stats.alpha = wedge_alpha_oracle(g, left, k, caps);
  for (int r = 0; r <= r_max; ++r) {
    const Graph gr = build_Gr(g, left, r);
    stats.beta[r] = k == 0 ? Count(1) : count_edginj(make_pattern(PatternKind::wedges, {k}), gr, caps);
  }
  return stats;
}

struct WedgePipelineReport {
  int n = 0;                       // |L|
  int max_wedges = 0;              // P_0..P_max_wedges were built
  std::vector<Polynomial> p;       // P_K(y) with y = n + r
  std::vector<Rational> row;       // recovered a_{t,k-t}
  Count alpha_k0;
  Count value;
};

/// m_k(g) from wedge-packing counts on G^r only: β_K(G^r) for r = 0..2K_max
/// gives P_K(y) by interpolation in y = n + r; moment recovery yields α_{k,0}.
inline WedgePipelineReport count_matchings_via_wedges_report(const Graph& g, const std::vector<bool>& left, int k,
                                                             const Caps& caps = Caps::for_pipelines()) {
  if (k < 0) throw DomainError("k must be nonnegative");
  WedgePipelineReport rep;
  for (bool l : left) rep.n += l ? 1 : 0;
  const int top = std::max(recovery_inputs_needed(k), 0);
  rep.max_wedges = top;
  // counts[r][K] = β_K(G^r)
  std::vector<std::vector<Count>> counts;
  for (int r = 0; r <= 2 * top; ++r) {
    const Graph gr = build_Gr(g, left, r);
    auto sets = count_wedge_sets(gr, top, caps);
    for (int kk = 0; kk <= top; ++kk) sets[static_cast<std::size_t>(kk)] *= power(2, static_cast<unsigned>(kk)) * factorial(kk);
    counts.push_back(std::move(sets));
  }
  for (int kk = 0; kk <= top; ++kk) {
    std::vector<std::pair<Rational, Rational>> points;
    for (int r = 0; r <= 2 * kk; ++r) points.emplace_back(Rational(rep.n + r), Rational(counts[static_cast<std::size_t>(r)][static_cast<std::size_t>(kk)]));
    Polynomial poly = interpolate(points);
    for (int r = 2 * kk + 1; r <= 2 * top; ++r) {
      if (poly(Rational(rep.n + r)) != Rational(counts[static_cast<std::size_t>(r)][static_cast<std::size_t>(kk)])) {
        throw IdentityViolation("wedge counts are not a polynomial of degree <= 2K in r");
      }
    }
    rep.p.push_back(std::move(poly));
  }
  rep.row = recover_unknowns(k, rep.p);
  const Rational a = rep.row[static_cast<std::size_t>(k)];
  if (denominator(a) != 1) throw IdentityViolation("recovered alpha_{k,0} is not an integer");
  rep.alpha_k0 = numerator(a);
  rep.value = exact_div(rep.alpha_k0, power(2, static_cast<unsigned>(k)) * factorial(k), "alpha_{k,0} / (2^k k!)");
  return rep;
}

inline Count count_matchings_via_wedges(const Graph& g, int k, const Caps& caps = Caps::for_pipelines()) {
  return count_matchings_via_wedges_report(g, infer_left_side(g), k, caps).value;
}

// ---------------------------------------------------------------------------
// Triangle packings and subdivided stars

inline Graph add_apex(const Graph& g) {
  Graph out = underlying_graph(g);
  const int a = out.add_vertex();
  for (int v = 0; v < g.num_vertices(); ++v) out.add_edge(v, a);
  return out;
}

/// m_k(g) = EdgInj(k·K_3, g + apex) / (6^k·k!) for bipartite g.
inline Count count_matchings_via_apex(const Graph& g, int k, const Caps& caps = Caps::for_pipelines()) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (!is_bipartite(g)) throw DomainError("apex reduction needs a bipartite graph");
  if (k == 0) return 1;
  const Count total = count_edginj(make_pattern(PatternKind::triangles, {k}), add_apex(g), caps);
  return exact_div(total, power(6, static_cast<unsigned>(k)) * factorial(k), "EdgInj(k K_3) / (6^k k!)");
}

/// G' = G^0 plus the pendant path 0-1-2, with vertex 2 last.
inline Graph build_star_host(const Graph& g, const std::vector<bool>& left) {
  Graph out = build_Gr(g, left, 1);  // vertex 1 hangs at 0
  out.add_edge(1, out.add_vertex());
  return out;
}

/// m_k(g) = (EdgInj(SS_{k+1}, G') - EdgInj(SS_{k+1}, G' - {2})) / (k+1)!.
inline Count count_matchings_via_star(const Graph& g, const std::vector<bool>& left, int k,
                                      const Caps& caps = Caps::for_pipelines()) {
  if (k < 0) throw DomainError("k must be nonnegative");
  detail::check_bipartite_conditions(g, left);
  // SS_1 is a bare wedge whose center may land on 1; the identity needs k >= 1.
  if (k == 0) return 1;
  const Graph host = build_star_host(g, left);
  const Graph without = remove_vertices(host, {host.num_vertices() - 1});
  const Graph h = make_pattern(PatternKind::subdivided_star, {k + 1});
  const Count diff = count_edginj(h, host, caps) - count_edginj(h, without, caps);
  return exact_div(diff, factorial(k + 1), "star difference / (k+1)!");
}

inline Count count_matchings_via_star(const Graph& g, int k, const Caps& caps = Caps::for_pipelines()) {
  return count_matchings_via_star(g, infer_left_side(g), k, caps);
}

// ---------------------------------------------------------------------------
// Weighted cycles

struct CycleGadgetLayout {
  std::vector<int> base;            // p1..p4 of vertex v are base[v]..base[v]+3
  std::vector<int> weighted_edges;  // the p2p3 edge of each gadget
};

/// G_b: vertex v becomes the path p1-p2-p3-p4 with p2p3 of weight b, ports
/// s_v^i at p1 and t_v^i at p4 (i-th incident edge, 1-based in edge order);
/// an edge that is the i-th of v and the j-th of u adds {s_v^i, t_u^j} and
/// {s_u^j, t_v^i}. Every other edge has weight 1.
inline Graph build_cycle_gadget(const Graph& g, long long b, CycleGadgetLayout* layout = nullptr) {
  if (b < 0) throw DomainError("gadget weight must be nonnegative");
  CycleGadgetLayout lay;
  int total = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    lay.base.push_back(total);
    total += 4 + 2 * g.degree(v);
  }
  Graph out(total);
  auto s_port = [&](int v, int i) { return lay.base[static_cast<std::size_t>(v)] + 4 + (i - 1); };
  auto t_port = [&](int v, int i) { return lay.base[static_cast<std::size_t>(v)] + 4 + g.degree(v) + (i - 1); };
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int p = lay.base[static_cast<std::size_t>(v)];
    out.add_weighted_edge(p, p + 1, 1);
    lay.weighted_edges.push_back(out.add_weighted_edge(p + 1, p + 2, b));
    out.add_weighted_edge(p + 2, p + 3, 1);
    for (int i = 1; i <= g.degree(v); ++i) {
      out.add_weighted_edge(p, s_port(v, i), 1);
      out.add_weighted_edge(p + 3, t_port(v, i), 1);
    }
  }
  // position of each edge in its endpoints' incidence lists
  std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(g.num_edges()));
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      auto& slot = pos[static_cast<std::size_t>(inc[i].edge)];
      (g.edge(inc[i].edge).u == v ? slot.first : slot.second) = static_cast<int>(i) + 1;
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const int v = g.edge(e).u, u = g.edge(e).v;
    const int i = pos[static_cast<std::size_t>(e)].first, j = pos[static_cast<std::size_t>(e)].second;
    out.add_weighted_edge(s_port(v, i), t_port(u, j), 1);
    out.add_weighted_edge(s_port(u, j), t_port(v, i), 1);
  }
  if (layout) *layout = lay;
  return out;
}

/// Fewest weight-1 edges on a path between two distinct weighted edges
/// (endpoint to endpoint, weighted edges excluded); -1 with fewer than two.
inline int min_weighted_edge_separation(const Graph& gb, const CycleGadgetLayout& lay) {
  std::vector<bool> special(static_cast<std::size_t>(gb.num_edges()), false);
  for (int e : lay.weighted_edges) special[static_cast<std::size_t>(e)] = true;
  int best = -1;
  for (std::size_t a = 0; a < lay.weighted_edges.size(); ++a) {
    // BFS over unit edges from both endpoints of edge a
    std::vector<int> dist(static_cast<std::size_t>(gb.num_vertices()), -1);
    std::vector<int> queue;
    for (int x : {gb.edge(lay.weighted_edges[a]).u, gb.edge(lay.weighted_edges[a]).v}) {
      dist[static_cast<std::size_t>(x)] = 0;
      queue.push_back(x);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int x = queue[q];
      for (const auto& inc : gb.incident(x)) {
        if (special[static_cast<std::size_t>(inc.edge)] || dist[static_cast<std::size_t>(inc.neighbor)] >= 0) continue;
        dist[static_cast<std::size_t>(inc.neighbor)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(inc.neighbor);
      }
    }
    for (std::size_t c = 0; c < lay.weighted_edges.size(); ++c) {
      if (c == a) continue;
      for (int x : {gb.edge(lay.weighted_edges[c]).u, gb.edge(lay.weighted_edges[c]).v}) {
        int d = dist[static_cast<std::size_t>(x)];
        if (d >= 0 && (best < 0 || d < best)) best = d;
      }
    }
  }
  return best;
}

struct CycleGadgetReport {
  std::vector<Count> p_values;  // p(b) for b = 0..k
  Polynomial p;
  Count value;
};

/// Simple k-cycles from WEdgInj(C_{6k}, G_b) / (12k) at b = 0..k.
inline CycleGadgetReport count_simple_cycles_via_gadget_report(const Graph& g, int k,
                                                               const Caps& caps = Caps::for_pipelines()) {
  if (k < 3) throw DomainError("cycle length must be at least 3");
  CycleGadgetReport rep;
  const Graph pattern = make_pattern(PatternKind::cycle, {6 * k});
  std::vector<std::pair<Rational, Rational>> points;
  for (int b = 0; b <= k; ++b) {
    const Count total = count_edginj_weighted(pattern, build_cycle_gadget(g, b), caps);
    rep.p_values.push_back(exact_div(total, 12 * k, "WEdgInj(C_6k) / 12k"));
    points.emplace_back(Rational(b), Rational(rep.p_values.back()));
  }
  rep.p = interpolate(points);
  const Rational lead = rep.p.coeff(k);
  if (denominator(lead) != 1) throw IdentityViolation("leading coefficient is not an integer");
  rep.value = exact_div(numerator(lead), 2, "coefficient of x^k / 2");
  return rep;
}

inline Count count_simple_cycles_via_gadget(const Graph& g, int k, const Caps& caps = Caps::for_pipelines()) {
  return count_simple_cycles_via_gadget_report(g, k, caps).value;
}

/// Σ over edge-disjoint k-cycles of the product of edge weights, by the
/// weighted count of edge-injective maps from C_k divided by 2k.
inline Count weighted_edge_disjoint_cycles(const Graph& g, int k, const Caps& caps = Caps::for_pipelines()) {
  return exact_div(count_edginj_weighted(make_pattern(PatternKind::cycle, {k}), g, caps), 2 * k, "WEdgInj(C_k) / 2k");
}

// ---------------------------------------------------------------------------
// Weight removal

struct UnweightReport {
  Graph graph;      // G'
  int max_weight = 0;
  int cycle_length = 0;
  std::optional<Count> lhs;  // EdgInj(C_{2Wk+k}, G')
  std::optional<Count> rhs;  // (2W+1) · WEdgInj(C_k, G, w)
  bool holds() const { return lhs && rhs && *lhs == *rhs; }
};

/// Each weight-w edge ab becomes H_w (gadget G_W without e_W..e_{w+1}) joined
/// by {a, a_W} and {b, b_W}. With `check`, both sides of
/// EdgInj(C_{2Wk+k}, G') = (2W+1)·WEdgInj(C_k, G, w) are enumerated.
inline UnweightReport unweight_cycles(const Graph& g, int k, bool check = true,
                                      const Caps& caps = Caps::for_pipelines()) {
  if (!g.is_weighted()) throw DomainError("unweight_cycles needs a weighted graph");
  if (k < 4) throw DomainError("weight removal assumes k >= 4");
  UnweightReport rep;
  for (int e = 0; e < g.num_edges(); ++e) {
    long long w = g.weight(e);
    if (w < 1) throw DomainError("edge weights must be positive integers");
    rep.max_weight = std::max<int>(rep.max_weight, static_cast<int>(w));
  }
  if (rep.max_weight > k) throw DomainError("maximum weight exceeds k");
  const int big_w = std::max(rep.max_weight, 1);
  Graph out(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    const Graph gadget = make_pattern(PatternKind::gadget_h, {big_w, static_cast<int>(g.weight(e))});
    const int offset = out.num_vertices();
    for (int i = 0; i < gadget.num_vertices(); ++i) out.add_vertex();
    for (const Edge& ed : gadget.edges()) out.add_edge(offset + ed.u, offset + ed.v);
    out.add_edge(g.edge(e).u, offset + gadget.anchor("a" + std::to_string(big_w)));
    out.add_edge(g.edge(e).v, offset + gadget.anchor("b" + std::to_string(big_w)));
  }
  rep.cycle_length = 2 * big_w * k + k;
  rep.graph = out;
  if (check) {
    rep.lhs = count_edginj(make_pattern(PatternKind::cycle, {rep.cycle_length}), out, caps);
    rep.rhs = Count(2 * big_w + 1) * count_edginj_weighted(make_pattern(PatternKind::cycle, {k}), g, caps);
  }
  return rep;
}

/// All trails (walks without repeated edges) from a to b, as edge-id lists.
inline std::vector<std::vector<int>> trails_between(const Graph& g, int a, int b,
                                                    const Caps& caps = default_caps()) {
  std::vector<std::vector<int>> result;
  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  std::vector<int> path;
  detail::StepBudget budget(caps.max_steps, "trail enumeration");
  std::function<void(int)> rec = [&](int v) {
    budget.tick();
    if (v == b && !path.empty()) result.push_back(path);
    for (const auto& inc : g.incident(v)) {
      if (used[static_cast<std::size_t>(inc.edge)]) continue;
      used[static_cast<std::size_t>(inc.edge)] = 1;
      path.push_back(inc.edge);
      rec(inc.neighbor);
      path.pop_back();
      used[static_cast<std::size_t>(inc.edge)] = 0;
    }
  };
  rec(a);
  return result;
}

/// Length of the longest closed trail (0 if none).
inline int longest_closed_trail(const Graph& g, const Caps& caps = default_caps()) {
  int best = 0;
  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  detail::StepBudget budget(caps.max_steps, "closed trail search");
  std::function<void(int, int, int)> rec = [&](int start, int v, int len) {
    budget.tick();
    if (v == start && len > 0) best = std::max(best, len);
    for (const auto& inc : g.incident(v)) {
      if (used[static_cast<std::size_t>(inc.edge)]) continue;
      used[static_cast<std::size_t>(inc.edge)] = 1;
      rec(start, inc.neighbor, len + 1);
      used[static_cast<std::size_t>(inc.edge)] = 0;
    }
  };
  for (int v = 0; v < g.num_vertices(); ++v) rec(v, v, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Edge-disjoint cycles through paths

/// EC_k(g) = Σ_i EC_k(G_i, v_i) with G_i = g - {v_{i+1}..v_n}; each term is
/// |A_∅| - |A_{s}| - |A_{t}| + |A_{s,t}| over edge-disjoint paths with
/// `path_edges` edges (default k+2) in G_i plus pendants s, t at v_i, halved
/// since both traversal directions appear. A closed
/// trail through v_i that revisits v_i is counted once per visit, so the
/// identity is exact only while k-cycles cannot revisit a vertex (k <= 5).
inline Count ec_cycles_via_paths(const Graph& g, int k, int path_edges = 0,
                                 const Caps& caps = Caps::for_pipelines()) {
  if (k < 3) throw DomainError("cycle length must be at least 3");
  if (k > 5) throw DomainError("path reduction is exact only for k <= 5");
  if (path_edges == 0) path_edges = k + 2;
  const Graph base = underlying_graph(g);
  Count total = 0;
  for (int i = 0; i < base.num_vertices(); ++i) {
    std::vector<int> gone;
    for (int v = i + 1; v < base.num_vertices(); ++v) gone.push_back(v);
    Graph gi = remove_vertices(base, gone);  // keeps ids 0..i
    const int s = gi.add_vertex();
    const int t = gi.add_vertex();
    gi.add_edge(i, s);
    gi.add_edge(i, t);
    Count term = 0;
    for (int mask = 0; mask < 4; ++mask) {
      std::vector<int> drop;
      if (mask & 1) drop.push_back(s);
      if (mask & 2) drop.push_back(t);
      const Graph host = remove_vertices(gi, drop);
      const Count paths = count_edge_disjoint(host, path_edges, WalkKind::path, caps);
      term += (__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0) ? paths : Count(-paths);
    }
    if (term < 0) throw IdentityViolation("negative inclusion-exclusion term");
    // each cycle through v_i is an s..t path in both directions
    total += exact_div(term, 2, "paths through both pendants / 2");
  }
  return total;
}

}  // namespace edginj
