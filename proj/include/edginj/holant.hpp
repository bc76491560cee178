#pragma once

// Edge-colored Holant framework: signature graphs, colorful Holant values,
// matchgates, matchgate insertion, combined signatures and the bipartite
// reduction from colorful matchings to colorful matchings in subdivisions.

#include "edginj/common.hpp"
#include "edginj/graph.hpp"
#include "edginj/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace edginj {

class Signature {
 public:
  enum class Kind { hw_leq1, annotation_eq, table };

  static Signature hw_leq1() { return Signature(Kind::hw_leq1, {}); }
  /// [π(e1) = π(e2)] on weight-2 restrictions, 0 otherwise.
  static Signature annotation_eq() { return Signature(Kind::annotation_eq, {}); }
  /// values[mask] where bit i of mask is the i-th incident edge.
  static Signature table(std::vector<Rational> values) {
    const std::size_t n = values.size();
    if (n == 0 || (n & (n - 1)) != 0) throw DomainError("signature table size must be a power of two");
    return Signature(Kind::table, std::move(values));
  }

  Kind kind() const { return kind_; }
  const std::vector<Rational>& values() const { return values_; }

  /// Value on the restriction given by `mask` over `arity` incident edges;
  /// annotations are those of the incident edges (needed by annotation_eq).
  Rational evaluate(std::uint64_t mask, int arity, const std::vector<std::optional<int>>& annotations) const {
    const int weight = __builtin_popcountll(mask);
    switch (kind_) {
      case Kind::hw_leq1:
        return weight <= 1 ? 1 : 0;
      case Kind::annotation_eq: {
        if (weight != 2) return 0;
        std::vector<std::optional<int>> chosen;
        for (int i = 0; i < arity; ++i) {
          if ((mask >> i) & 1U) chosen.push_back(annotations[static_cast<std::size_t>(i)]);
        }
        if (!chosen[0] || !chosen[1]) throw DomainError("annotation signature on unannotated edge");
        return *chosen[0] == *chosen[1] ? 1 : 0;
      }
      case Kind::table:
        if (values_.size() != (std::size_t(1) << arity)) throw DomainError("signature table arity mismatch");
        return values_[mask];
    }
    return 0;
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  Signature(Kind kind, std::vector<Rational> values) : kind_(kind), values_(std::move(values)) {}
  Kind kind_;
  std::vector<Rational> values_;
};

struct SigEdge {
  int u = 0;
  int v = -1;  // -1: dangling edge with single endpoint u
  int color = 0;
  std::optional<int> annotation;
  bool dangling() const { return v < 0; }
};

/// Edge-colored multigraph with a signature per vertex. Dangling edges are
/// labeled 1..|D| in the order they were added.
class SignatureGraph {
 public:
  int add_vertex(Signature sig = Signature::hw_leq1()) {
    signatures_.push_back(std::move(sig));
    incidence_.emplace_back();
    return num_vertices() - 1;
  }

  int add_edge(int u, int v, int color, std::optional<int> annotation = std::nullopt) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("signature graphs have no loops");
    return push_edge({u, v, color, annotation});
  }

  int add_dangling(int u, int color, std::optional<int> annotation = std::nullopt) {
    check_vertex(u);
    int id = push_edge({u, -1, color, annotation});
    dangling_.push_back(id);
    return id;
  }

  void declare_color(int c) { colors_.insert(c); }

  int num_vertices() const { return static_cast<int>(signatures_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<SigEdge>& edges() const { return edges_; }
  const SigEdge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<int>& incident(int v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  const Signature& signature(int v) const { return signatures_.at(static_cast<std::size_t>(v)); }
  void set_signature(int v, Signature sig) { signatures_.at(static_cast<std::size_t>(v)) = std::move(sig); }
  /// Dangling edge ids by label (label i+1 at index i).
  const std::vector<int>& dangling() const { return dangling_; }
  const std::set<int>& colors() const { return colors_; }

  std::vector<int> color_class(int c) const {
    std::vector<int> result;
    for (int e = 0; e < num_edges(); ++e) {
      if (edges_[static_cast<std::size_t>(e)].color == c) result.push_back(e);
    }
    return result;
  }

  std::vector<std::optional<int>> incident_annotations(int v) const {
    std::vector<std::optional<int>> result;
    for (int e : incident(v)) result.push_back(edge(e).annotation);
    return result;
  }

  /// Signature value at v when exactly the edges with on[e] set carry 1.
  Rational value_at(int v, const std::vector<char>& on) const {
    std::uint64_t mask = 0;
    const auto& inc = incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      if (on[static_cast<std::size_t>(inc[i])]) mask |= std::uint64_t(1) << i;
    }
    return signature(v).evaluate(mask, static_cast<int>(inc.size()), incident_annotations(v));
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= num_vertices()) throw DomainError("signature graph vertex out of range");
  }
  int push_edge(SigEdge e) {
    const int id = num_edges();
    colors_.insert(e.color);
    incidence_[static_cast<std::size_t>(e.u)].push_back(id);
    if (e.v >= 0) incidence_[static_cast<std::size_t>(e.v)].push_back(id);
    edges_.push_back(e);
    return id;
  }

  std::vector<Signature> signatures_;
  std::vector<std::vector<int>> incidence_;
  std::vector<SigEdge> edges_;
  std::vector<int> dangling_;
  std::set<int> colors_;
};

namespace detail {

/// Sums Π_v f_v over assignments choosing exactly one edge of every color in
/// `colors`, on top of the edges already set in `on`.
inline Rational colorful_sum(const SignatureGraph& omega, const std::vector<int>& colors, std::vector<char> on,
                             const Caps& caps) {
  std::vector<std::vector<int>> classes;
  for (int c : colors) classes.push_back(omega.color_class(c));
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<int> weight(static_cast<std::size_t>(omega.num_vertices()), 0);
  for (int e = 0; e < omega.num_edges(); ++e) {
    if (!on[static_cast<std::size_t>(e)]) continue;
    const SigEdge& ed = omega.edge(e);
    ++weight[static_cast<std::size_t>(ed.u)];
    if (ed.v >= 0) ++weight[static_cast<std::size_t>(ed.v)];
  }
  auto limit = [&](int v) {
    switch (omega.signature(v).kind()) {
      case Signature::Kind::hw_leq1: return 1;
      case Signature::Kind::annotation_eq: return 2;
      default: return 1 << 20;
    }
  };
  StepBudget budget(caps.max_steps, "colorful Holant");
  Rational total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    budget.tick();
    if (i == classes.size()) {
      Rational product = 1;
      for (int v = 0; v < omega.num_vertices() && product != 0; ++v) product *= omega.value_at(v, on);
      total += product;
      return;
    }
    for (int e : classes[i]) {
      if (on[static_cast<std::size_t>(e)]) continue;
      const SigEdge& ed = omega.edge(e);
      if (weight[static_cast<std::size_t>(ed.u)] + 1 > limit(ed.u)) continue;
      if (ed.v >= 0 && weight[static_cast<std::size_t>(ed.v)] + 1 > limit(ed.v)) continue;
      on[static_cast<std::size_t>(e)] = 1;
      ++weight[static_cast<std::size_t>(ed.u)];
      if (ed.v >= 0) ++weight[static_cast<std::size_t>(ed.v)];
      rec(i + 1);
      --weight[static_cast<std::size_t>(ed.u)];
      if (ed.v >= 0) --weight[static_cast<std::size_t>(ed.v)];
      on[static_cast<std::size_t>(e)] = 0;
    }
  };
  rec(0);
  return total;
}

}  // namespace detail

/// Σ over colorful assignments of the product of vertex signatures.
inline Rational col_holant(const SignatureGraph& omega, const Caps& caps = default_caps()) {
  if (!omega.dangling().empty()) throw DomainError("col_holant: signature graph has dangling edges");
  std::vector<int> colors(omega.colors().begin(), omega.colors().end());
  return detail::colorful_sum(omega, colors, std::vector<char>(static_cast<std::size_t>(omega.num_edges()), 0), caps);
}

/// Colorful signature of a matchgate at boundary assignment x (x[i] is the
/// value of dangling edge i+1).
inline Rational col_sig(const SignatureGraph& gamma, const std::vector<bool>& x, const Caps& caps = default_caps()) {
  if (x.size() != gamma.dangling().size()) throw DomainError("col_sig: assignment size does not match the boundary");
  for (int v = 0; v < gamma.num_vertices(); ++v) {
    if (gamma.signature(v).kind() != Signature::Kind::hw_leq1) throw DomainError("col_sig: matchgates use HW<=1 only");
  }
  std::vector<char> on(static_cast<std::size_t>(gamma.num_edges()), 0);
  std::map<int, int> hits;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    const int e = gamma.dangling()[i];
    on[static_cast<std::size_t>(e)] = 1;
    if (++hits[gamma.edge(e).color] > 1) return 0;
  }
  // Colors not hit by x must be supplied by exactly one internal edge;
  // dangling edges are fixed by x.
  std::vector<std::vector<int>> classes;
  for (int c : gamma.colors()) {
    if (hits.count(c)) continue;
    std::vector<int> cls;
    for (int e : gamma.color_class(c)) {
      if (!gamma.edge(e).dangling()) cls.push_back(e);
    }
    classes.push_back(std::move(cls));
  }
  std::vector<int> weight(static_cast<std::size_t>(gamma.num_vertices()), 0);
  for (int e = 0; e < gamma.num_edges(); ++e) {
    if (on[static_cast<std::size_t>(e)]) ++weight[static_cast<std::size_t>(gamma.edge(e).u)];
  }
  for (int v = 0; v < gamma.num_vertices(); ++v) {
    if (weight[static_cast<std::size_t>(v)] > 1) return 0;
  }
  detail::StepBudget budget(caps.max_steps, "colorful signature");
  Rational total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    budget.tick();
    if (i == classes.size()) {
      total += 1;
      return;
    }
    for (int e : classes[i]) {
      const SigEdge& ed = gamma.edge(e);
      if (weight[static_cast<std::size_t>(ed.u)] || weight[static_cast<std::size_t>(ed.v)]) continue;
      ++weight[static_cast<std::size_t>(ed.u)];
      ++weight[static_cast<std::size_t>(ed.v)];
      rec(i + 1);
      --weight[static_cast<std::size_t>(ed.u)];
      --weight[static_cast<std::size_t>(ed.v)];
    }
  };
  rec(0);
  return total;
}

/// Tabulates ColSig(gamma) as a signature over its dangling edges.
inline Signature col_sig_table(const SignatureGraph& gamma, const Caps& caps = default_caps()) {
  const std::size_t d = gamma.dangling().size();
  if (d > 20) throw CapExceeded("col_sig_table: more than 20 dangling edges");
  std::vector<Rational> values(std::size_t(1) << d);
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    std::vector<bool> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = (mask >> i) & 1U;
    values[mask] = col_sig(gamma, x, caps);
  }
  return Signature::table(std::move(values));
}

/// Tabulates the signature at vertex v of omega over its incident order.
inline std::vector<Rational> signature_table(const SignatureGraph& omega, int v) {
  const auto& inc = omega.incident(v);
  if (inc.size() > 20) throw CapExceeded("signature_table: vertex degree above 20");
  std::vector<Rational> values(std::size_t(1) << inc.size());
  auto annotations = omega.incident_annotations(v);
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = omega.signature(v).evaluate(mask, static_cast<int>(inc.size()), annotations);
  }
  return values;
}

/// Signature graph of a colored graph with HW<=1 at every vertex.
inline SignatureGraph build_match_holant(const Graph& g) {
  if (!g.is_colored() && g.num_edges() > 0) throw DomainError("build_match_holant needs a colored graph");
  SignatureGraph omega;
  for (int v = 0; v < g.num_vertices(); ++v) omega.add_vertex();
  for (int e = 0; e < g.num_edges(); ++e) omega.add_edge(g.edge(e).u, g.edge(e).v, g.color(e));
  for (int c = 1; c <= g.num_colors(); ++c) omega.declare_color(c);
  return omega;
}

/// Removes signatures (all must be HW<=1) and renumbers colors to 1..K in
/// increasing order. Parallel edges are rejected since Graph is simple.
inline Graph strip_signatures(const SignatureGraph& omega) {
  if (!omega.dangling().empty()) throw DomainError("strip_signatures: dangling edges present");
  std::map<int, int> rename;
  for (int c : omega.colors()) rename.emplace(c, static_cast<int>(rename.size()) + 1);
  Graph g(omega.num_vertices());
  for (int v = 0; v < omega.num_vertices(); ++v) {
    if (omega.signature(v).kind() != Signature::Kind::hw_leq1) {
      throw DomainError("strip_signatures: vertex with a non-matching signature");
    }
  }
  for (const SigEdge& e : omega.edges()) g.add_colored_edge(e.u, e.v, rename.at(e.color));
  g.set_num_colors(static_cast<int>(rename.size()));
  return g;
}

/// Removes v and splices gamma in its place: the i-th dangling edge of gamma
/// is identified with edge_order[i] of I(v). Vertices above v shift down by
/// one; gamma's vertices are appended. Internal colors of gamma are renamed
/// to fresh ids above every color in use.
inline SignatureGraph insert_matchgate(const SignatureGraph& omega, int v, const SignatureGraph& gamma,
                                       const std::vector<int>& edge_order) {
  const auto& inc = omega.incident(v);
  if (inc.size() != gamma.dangling().size() || edge_order.size() != inc.size()) {
    throw DomainError("insert_matchgate: arity mismatch");
  }
  {
    auto a = edge_order;
    auto b = inc;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw DomainError("insert_matchgate: edge order is not a permutation of I(v)");
  }
  for (std::size_t i = 0; i < edge_order.size(); ++i) {
    if (omega.edge(edge_order[i]).color != gamma.edge(gamma.dangling()[i]).color) {
      throw DomainError("insert_matchgate: color mismatch at dangling edge " + std::to_string(i + 1));
    }
  }
  std::set<int> boundary_colors;
  for (int e : gamma.dangling()) boundary_colors.insert(gamma.edge(e).color);
  int fresh = 0;
  for (int c : omega.colors()) fresh = std::max(fresh, c);
  for (int c : gamma.colors()) fresh = std::max(fresh, c);
  std::map<int, int> rename;
  for (const SigEdge& e : gamma.edges()) {
    if (e.dangling() || boundary_colors.count(e.color)) continue;
    if (!rename.count(e.color)) rename[e.color] = ++fresh;
  }

  SignatureGraph result;
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  for (int w = 0; w < omega.num_vertices(); ++w) {
    if (w != v) result.add_vertex(omega.signature(w));
  }
  const int base = omega.num_vertices() - 1;
  for (int w = 0; w < gamma.num_vertices(); ++w) result.add_vertex(gamma.signature(w));
  std::map<int, int> port_of;  // omega edge -> gamma endpoint
  for (std::size_t i = 0; i < edge_order.size(); ++i) {
    port_of[edge_order[i]] = base + gamma.edge(gamma.dangling()[i]).u;
  }
  for (int c : omega.colors()) result.declare_color(c);
  std::vector<int> new_dangling_label;
  for (int e = 0; e < omega.num_edges(); ++e) {
    const SigEdge& ed = omega.edge(e);
    auto it = port_of.find(e);
    if (it == port_of.end()) {
      if (ed.dangling()) {
        result.add_dangling(shift(ed.u), ed.color, ed.annotation);
      } else {
        result.add_edge(shift(ed.u), shift(ed.v), ed.color, ed.annotation);
      }
    } else if (ed.dangling()) {
      result.add_dangling(it->second, ed.color, ed.annotation);
    } else {
      const int other = ed.u == v ? ed.v : ed.u;
      result.add_edge(shift(other), it->second, ed.color, ed.annotation);
    }
  }
  for (const SigEdge& ed : gamma.edges()) {
    if (ed.dangling()) continue;
    result.add_edge(base + ed.u, base + ed.v, rename.at(ed.color), ed.annotation);
  }
  return result;
}

struct CombinedTerm {
  int vertex;
  std::vector<std::pair<Rational, Signature>> parts;  // f_v = Σ c_i g_i
};

/// Expands ColHolant(Ω) = Σ_θ (Π c_{κ,θ(κ)}) ColHolant(Ω_θ). Each
/// decomposition is validated point-wise against the tabulated f_v.
inline std::vector<std::pair<Rational, SignatureGraph>> expand_combined(const SignatureGraph& omega,
                                                                        const std::vector<CombinedTerm>& terms) {
  for (const auto& term : terms) {
    const int v = term.vertex;
    if (term.parts.empty()) throw DomainError("expand_combined: empty decomposition");
    auto target = signature_table(omega, v);
    const int arity = static_cast<int>(omega.incident(v).size());
    auto annotations = omega.incident_annotations(v);
    for (std::size_t mask = 0; mask < target.size(); ++mask) {
      Rational sum = 0;
      for (const auto& [c, g] : term.parts) sum += c * g.evaluate(mask, arity, annotations);
      if (sum != target[mask]) {
        throw IdentityViolation("expand_combined: decomposition at vertex " + std::to_string(v) +
                                " fails at assignment " + std::to_string(mask));
      }
    }
  }
  std::vector<std::pair<Rational, SignatureGraph>> result{{Rational(1), omega}};
  for (const auto& term : terms) {
    std::vector<std::pair<Rational, SignatureGraph>> next;
    for (const auto& [coef, graph] : result) {
      for (const auto& [c, g] : term.parts) {
        SignatureGraph copy = graph;
        copy.set_signature(term.vertex, g);
        next.emplace_back(coef * c, std::move(copy));
      }
    }
    result = std::move(next);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Bipartite reduction

/// Color (i, j) of the bipartite construction, j in 1..4.
inline int bip_color(int i, int j) { return 4 * (i - 1) + j; }

/// Ω_bip(g): a vertex w_i per color i (ids n+i-1) with signature
/// annotation_eq; each edge e = uv of color i becomes u–w_i of color (i,1)
/// and w_i–v of color (i,2), both annotated with e.
inline SignatureGraph build_omega_bip(const Graph& g) {
  if (!g.is_colored()) throw DomainError("build_omega_bip needs a colored graph");
  SignatureGraph omega;
  for (int v = 0; v < g.num_vertices(); ++v) omega.add_vertex();
  const int k = g.num_colors();
  for (int i = 1; i <= k; ++i) omega.add_vertex(Signature::annotation_eq());
  for (int i = 1; i <= k; ++i) {
    omega.declare_color(bip_color(i, 1));
    omega.declare_color(bip_color(i, 2));
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const int i = g.color(e);
    const int w = g.num_vertices() + i - 1;
    omega.add_edge(g.edge(e).u, w, bip_color(i, 1), e);
    omega.add_edge(w, g.edge(e).v, bip_color(i, 2), e);
  }
  return omega;
}

/// Γ_{i,variant} for the dangling edges `ports` (color, annotation), in
/// dangling-label order. Annotations are ranked in increasing order as
/// a_j/b_j pairs: a color (i,1) port attaches to a_j, a color (i,2) port to
/// b_j. Variant 2 adds c_j with a_j–c_j of color (i,3) and c_j–b_j of color (i,4).
inline SignatureGraph build_gamma(int variant, int i, const std::vector<std::pair<int, int>>& ports) {
  if (variant != 1 && variant != 2) throw DomainError("build_gamma: variant must be 1 or 2");
  std::vector<int> annotations;
  for (const auto& [color, a] : ports) annotations.push_back(a);
  std::sort(annotations.begin(), annotations.end());
  annotations.erase(std::unique(annotations.begin(), annotations.end()), annotations.end());
  const int m = static_cast<int>(annotations.size());
  if (m < 1) throw DomainError("build_gamma: needs m >= 1");
  SignatureGraph gamma;
  // a_j = 2j, b_j = 2j+1 (0-based j), then c_j.
  for (int v = 0; v < 2 * m; ++v) gamma.add_vertex();
  std::vector<int> seen(static_cast<std::size_t>(2 * m), 0);
  for (const auto& [color, a] : ports) {
    const int j = static_cast<int>(std::lower_bound(annotations.begin(), annotations.end(), a) - annotations.begin());
    int side;
    if (color == bip_color(i, 1)) {
      side = 0;
    } else if (color == bip_color(i, 2)) {
      side = 1;
    } else {
      throw DomainError("build_gamma: port color outside (i,1)/(i,2)");
    }
    const int vertex = 2 * j + side;
    if (++seen[static_cast<std::size_t>(vertex)] > 1) throw DomainError("build_gamma: two ports on one external vertex");
    gamma.add_dangling(vertex, color, a);
  }
  if (variant == 2) {
    for (int j = 0; j < m; ++j) {
      const int c = gamma.add_vertex();
      gamma.add_edge(2 * j, c, bip_color(i, 3));
      gamma.add_edge(c, 2 * j + 1, bip_color(i, 4));
    }
  }
  return gamma;
}

/// Ports of w_i in Ω_bip, in incidence order.
inline std::vector<std::pair<int, int>> gamma_ports(const SignatureGraph& omega, int w) {
  std::vector<std::pair<int, int>> ports;
  for (int e : omega.incident(w)) ports.emplace_back(omega.edge(e).color, omega.edge(e).annotation.value());
  return ports;
}

/// Coefficient of Γ_{i,variant} in f_i = (m²-3m+3)·ColSig(Γ_{i,1}) - ColSig(Γ_{i,2}).
inline Rational gamma_coefficient(int variant, int m) {
  return variant == 1 ? Rational(m * m - 3 * m + 3) : Rational(-1);
}

struct SubdivisionQuery {
  Rational coefficient;
  Graph graph;  // colored, colors renumbered to 1..K
};

/// Colorful matchings of g via Ω_bip and Γ insertion: 2^k queries to the
/// colorful-matching oracle on subgraphs of the 3-subdivision of g.
inline Count colmatch_via_subdivision(const Graph& g, int k, std::vector<SubdivisionQuery>* queries = nullptr,
                                      const Caps& caps = default_caps()) {
  if (!g.is_colored() || g.num_colors() != k) throw DomainError("colmatch_via_subdivision needs a k-colored graph");
  if (k > 20) throw CapExceeded("colmatch_via_subdivision: 2^k terms with k > 20");
  const SignatureGraph omega = build_omega_bip(g);
  std::vector<int> sizes;
  for (int i = 1; i <= k; ++i) sizes.push_back(static_cast<int>(g.color_class(i).size()));
  for (int m : sizes) {
    if (m == 0) return 0;  // no colorful assignment exists
  }
  Rational total = 0;
  for (std::uint64_t theta = 0; theta < (std::uint64_t(1) << k); ++theta) {
    SignatureGraph current = omega;
    Rational coefficient = 1;
    // w_i sits at id n + i - 1 before any insertion; each insertion removes
    // one vertex below the later w's and appends gamma at the end, so the
    // next w_i is always at id n.
    for (int i = 1; i <= k; ++i) {
      const int variant = ((theta >> (i - 1)) & 1U) ? 2 : 1;
      const int w = g.num_vertices();
      const auto ports = gamma_ports(current, w);
      const SignatureGraph gamma = build_gamma(variant, i, ports);
      current = insert_matchgate(current, w, gamma, current.incident(w));
      coefficient *= gamma_coefficient(variant, sizes[static_cast<std::size_t>(i - 1)]);
    }
    Graph query = strip_signatures(current);
    const Count value = count_matchings(query, query.num_colors(), true, caps);
    total += coefficient * Rational(value);
    if (queries) queries->push_back({coefficient, std::move(query)});
  }
  if (denominator(total) != 1 || total < 0) throw IdentityViolation("colmatch_via_subdivision: non-integral result");
  return numerator(total);
}

/// Colorful matchings by inclusion–exclusion over color subsets:
/// Σ_{S⊆[k]} (-1)^{k-|S|} · (k-matchings using only colors in S).
inline Count colmatch_via_uncolored(const Graph& g, const Caps& caps = default_caps()) {
  if (!g.is_colored()) throw DomainError("colmatch_via_uncolored needs a colored graph");
  const int k = g.num_colors();
  if (k > 24) throw CapExceeded("colmatch_via_uncolored: 2^k terms with k > 24");
  Count total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << k); ++s) {
    std::vector<bool> keep(static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) keep[static_cast<std::size_t>(e)] = (s >> (g.color(e) - 1)) & 1U;
    Graph sub = underlying_graph(edge_subgraph(g, keep));
    const Count m = count_matchings(sub, k, false, caps);
    if ((k - __builtin_popcountll(s)) % 2 == 0) {
      total += m;
    } else {
      total -= m;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Text form
//
//   v <n>
//   sig <v> hw1 | aeq | table <values...>
//   e <u> <v> c=<int> [a=<int>]
//   d <u> c=<int> [a=<int>]          dangling edge (labels in order)

inline std::string serialize_signature_graph(const SignatureGraph& omega) {
  std::ostringstream out;
  out << "v " << omega.num_vertices() << "\n";
  for (int v = 0; v < omega.num_vertices(); ++v) {
    const Signature& s = omega.signature(v);
    out << "sig " << v << " ";
    switch (s.kind()) {
      case Signature::Kind::hw_leq1: out << "hw1"; break;
      case Signature::Kind::annotation_eq: out << "aeq"; break;
      case Signature::Kind::table:
        out << "table";
        for (const auto& value : s.values()) out << " " << value;
        break;
    }
    out << "\n";
  }
  for (const SigEdge& e : omega.edges()) {
    if (e.dangling()) {
      out << "d " << e.u;
    } else {
      out << "e " << e.u << " " << e.v;
    }
    out << " c=" << e.color;
    if (e.annotation) out << " a=" << *e.annotation;
    out << "\n";
  }
  return out.str();
}

inline SignatureGraph parse_signature_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  SignatureGraph omega;
  bool header = false;
  auto fail = [&](const std::string& why) { throw ParseError("line " + std::to_string(line_no) + ": " + why); };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int value = std::stoi(s, &used);
      if (used != s.size()) fail("bad integer '" + s + "'");
      return value;
    } catch (const std::logic_error&) {
      fail("bad integer '" + s + "'");
    }
    return 0;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "v") {
      if (header || tok.size() != 2) fail("bad header");
      header = true;
      const int n = to_int(tok[1]);
      for (int i = 0; i < n; ++i) omega.add_vertex();
      continue;
    }
    if (!header) fail("record before header");
    if (tok[0] == "sig") {
      if (tok.size() < 3) fail("bad signature line");
      const int v = to_int(tok[1]);
      if (v < 0 || v >= omega.num_vertices()) fail("vertex out of range");
      if (tok[2] == "hw1") {
        omega.set_signature(v, Signature::hw_leq1());
      } else if (tok[2] == "aeq") {
        omega.set_signature(v, Signature::annotation_eq());
      } else if (tok[2] == "table") {
        std::vector<Rational> values;
        for (std::size_t i = 3; i < tok.size(); ++i) {
          try {
            values.emplace_back(tok[i]);
          } catch (const std::exception&) {
            fail("bad rational '" + tok[i] + "'");
          }
        }
        try {
          omega.set_signature(v, Signature::table(std::move(values)));
        } catch (const DomainError& e) {
          fail(e.what());
        }
      } else {
        fail("unknown signature '" + tok[2] + "'");
      }
    } else if (tok[0] == "e" || tok[0] == "d") {
      const bool dangling = tok[0] == "d";
      const std::size_t first_attr = dangling ? 2 : 3;
      if (tok.size() < first_attr) fail("malformed edge");
      std::optional<int> color, annotation;
      for (std::size_t i = first_attr; i < tok.size(); ++i) {
        if (tok[i].rfind("c=", 0) == 0) {
          color = to_int(tok[i].substr(2));
        } else if (tok[i].rfind("a=", 0) == 0) {
          annotation = to_int(tok[i].substr(2));
        } else {
          fail("unknown attribute '" + tok[i] + "'");
        }
      }
      if (!color) fail("edge without color");
      try {
        if (dangling) {
          omega.add_dangling(to_int(tok[1]), *color, annotation);
        } else {
          omega.add_edge(to_int(tok[1]), to_int(tok[2]), *color, annotation);
        }
      } catch (const DomainError& e) {
        fail(e.what());
      }
    } else {
      fail("unknown record '" + tok[0] + "'");
    }
  }
  if (!header) throw ParseError("missing 'v' header");
  return omega;
}

}  // namespace edginj
