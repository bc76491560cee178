#pragma once

#include "edginj/common.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace edginj {

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  int other(int w) const { return w == u ? v : u; }
  bool touches(int w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  int neighbor;
  int edge;
};

/// Simple undirected graph on vertices 0..n-1 with optional edge colors
/// (1-based, all-or-none) and optional nonnegative edge weights (all-or-none).
///
/// Edge ids follow insertion order; every edge-indexed construction in this
/// library (line graphs, subdivisions, gadget ports) uses that order.
/// Named anchors record gadget vertices and marked edges for callers.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : incidence_(static_cast<std::size_t>(check_size(n))) {}

  int num_vertices() const { return static_cast<int>(incidence_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  int add_vertex() {
    incidence_.emplace_back();
    return num_vertices() - 1;
  }

  int add_edge(int u, int v) { return add_edge_impl(u, v, 0, std::nullopt); }

  int add_colored_edge(int u, int v, int color) {
    if (color < 1) throw DomainError("edge colors are 1-based");
    return add_edge_impl(u, v, color, std::nullopt);
  }

  int add_weighted_edge(int u, int v, long long weight) {
    if (weight < 0) throw DomainError("edge weights must be nonnegative");
    return add_edge_impl(u, v, 0, weight);
  }

  int add_edge(int u, int v, std::optional<int> color, std::optional<long long> weight) {
    if (color && *color < 1) throw DomainError("edge colors are 1-based");
    if (weight && *weight < 0) throw DomainError("edge weights must be nonnegative");
    return add_edge_impl(u, v, color.value_or(0), weight);
  }

  bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

  /// Id of edge {u,v}, or -1.
  int edge_id(int u, int v) const {
    if (!valid(u) || !valid(v)) return -1;
    const auto& a = incidence_[static_cast<std::size_t>(u)];
    const auto& b = incidence_[static_cast<std::size_t>(v)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    const int target = a.size() <= b.size() ? v : u;
    for (const auto& inc : shorter) {
      if (inc.neighbor == target) return inc.edge;
    }
    return -1;
  }

  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  /// Incident edges of v in increasing edge-id order.
  const std::vector<Incidence>& incident(int v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> result;
    for (const auto& inc : incident(v)) result.push_back(inc.neighbor);
    return result;
  }

  bool is_colored() const { return num_colors_ > 0; }
  int num_colors() const { return num_colors_; }
  /// Declares k colors; every present color must lie in 1..k.
  void set_num_colors(int k) {
    for (int c : colors_) {
      if (c > k) throw DomainError("declared color count below a used color");
    }
    if (k > 0 && !edges_.empty() && colors_.front() == 0) {
      throw DomainError("cannot declare colors on an uncolored graph with edges");
    }
    num_colors_ = k;
  }
  int color(int e) const { return colors_.at(static_cast<std::size_t>(e)); }
  std::vector<int> color_class(int c) const {
    std::vector<int> result;
    for (int e = 0; e < num_edges(); ++e) {
      if (colors_[static_cast<std::size_t>(e)] == c) result.push_back(e);
    }
    return result;
  }

  bool is_weighted() const { return weighted_; }
  long long weight(int e) const {
    if (!weighted_) throw DomainError("graph carries no edge weights");
    return weights_.at(static_cast<std::size_t>(e));
  }

  void set_anchor(const std::string& name, int v) { anchors_[name] = v; }
  int anchor(const std::string& name) const {
    auto it = anchors_.find(name);
    if (it == anchors_.end()) throw DomainError("no anchor named " + name);
    return it->second;
  }
  const std::map<std::string, int>& anchors() const { return anchors_; }

  void set_edge_mark(const std::string& name, int e) { edge_marks_[name] = e; }
  int edge_mark(const std::string& name) const {
    auto it = edge_marks_.find(name);
    if (it == edge_marks_.end()) throw DomainError("no marked edge named " + name);
    return it->second;
  }
  const std::map<std::string, int>& edge_marks() const { return edge_marks_; }

  /// Edges with colors and weights in a canonical sorted order.
  std::vector<std::tuple<Edge, int, long long>> canonical_edges() const {
    std::vector<std::tuple<Edge, int, long long>> result;
    for (int e = 0; e < num_edges(); ++e) {
      result.emplace_back(edges_[static_cast<std::size_t>(e)], colors_[static_cast<std::size_t>(e)],
                          weighted_ ? weights_[static_cast<std::size_t>(e)] : 0);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  /// Structural equality: same vertex count, colors and weighted edge set.
  /// Anchors and edge insertion order are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices() == b.num_vertices() && a.num_colors_ == b.num_colors_ &&
           a.weighted_ == b.weighted_ && a.canonical_edges() == b.canonical_edges();
  }

 private:
  static int check_size(int n) {
    if (n < 0) throw DomainError("negative vertex count");
    return n;
  }

  bool valid(int v) const { return v >= 0 && v < num_vertices(); }

  int add_edge_impl(int u, int v, int color, std::optional<long long> weight) {
    if (!valid(u) || !valid(v)) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loops are not allowed");
    if (has_edge(u, v)) throw DomainError("parallel edges are not allowed");
    if (!edges_.empty() || num_colors_ > 0) {
      if ((color > 0) != is_colored()) throw DomainError("colors must be given on all edges or none");
    }
    if (!edges_.empty() && weight.has_value() != weighted_) {
      throw DomainError("weights must be given on all edges or none");
    }
    if (edges_.empty()) weighted_ = weight.has_value();
    if (u > v) std::swap(u, v);
    const int id = num_edges();
    edges_.push_back({u, v});
    colors_.push_back(color);
    if (color > num_colors_) num_colors_ = color;
    weights_.push_back(weight.value_or(0));
    incidence_[static_cast<std::size_t>(u)].push_back({v, id});
    incidence_[static_cast<std::size_t>(v)].push_back({u, id});
    return id;
  }

  std::vector<Edge> edges_;
  std::vector<int> colors_;
  std::vector<long long> weights_;
  std::vector<std::vector<Incidence>> incidence_;
  int num_colors_ = 0;
  bool weighted_ = false;
  std::map<std::string, int> anchors_;
  std::map<std::string, int> edge_marks_;
};

// ---------------------------------------------------------------------------
// Partitions

/// Partition of 0..n-1 into nonempty blocks. Blocks are kept sorted and
/// ordered by their smallest element.
class Partition {
 public:
  Partition() = default;

  explicit Partition(int n, std::vector<std::vector<int>> blocks) : block_of_(static_cast<std::size_t>(n), -1) {
    for (auto& block : blocks) {
      if (block.empty()) throw DomainError("partition blocks must be nonempty");
      std::sort(block.begin(), block.end());
    }
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (int v : blocks[b]) {
        if (v < 0 || v >= n) throw DomainError("partition element out of range");
        if (block_of_[static_cast<std::size_t>(v)] != -1) throw DomainError("partition blocks overlap");
        block_of_[static_cast<std::size_t>(v)] = static_cast<int>(b);
      }
    }
    for (int b : block_of_) {
      if (b == -1) throw DomainError("partition does not cover every vertex");
    }
    blocks_ = std::move(blocks);
  }

  /// From a restricted-growth string (rgs[i] = block index of element i).
  static Partition from_rgs(const std::vector<int>& rgs) {
    int count = 0;
    for (int b : rgs) count = std::max(count, b + 1);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < rgs.size(); ++i) blocks[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i));
    return Partition(static_cast<int>(rgs.size()), std::move(blocks));
  }

  static Partition singletons(int n) {
    std::vector<int> rgs(static_cast<std::size_t>(n));
    std::iota(rgs.begin(), rgs.end(), 0);
    return from_rgs(rgs);
  }

  int num_elements() const { return static_cast<int>(block_of_.size()); }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int v) const { return block_of_.at(static_cast<std::size_t>(v)); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

/// Calls f(rgs, block_count) for every set partition of 0..n-1, in
/// restricted-growth-string order.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      f(rgs, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

// ---------------------------------------------------------------------------
// Basic transformations

inline std::vector<int> connected_components(const Graph& g, int* count = nullptr) {
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (comp[static_cast<std::size_t>(inc.neighbor)] == -1) {
          comp[static_cast<std::size_t>(inc.neighbor)] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

/// Subgraph induced by the vertices with keep[v] set, renumbered in order.
/// Colors (with the declared count) and weights carry over.
inline Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep,
                              std::vector<int>* new_id = nullptr) {
  std::vector<int> ids(static_cast<std::size_t>(g.num_vertices()), -1);
  int n = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (keep.at(static_cast<std::size_t>(v))) ids[static_cast<std::size_t>(v)] = n++;
  }
  Graph result(n);
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    int a = ids[static_cast<std::size_t>(ed.u)];
    int b = ids[static_cast<std::size_t>(ed.v)];
    if (a < 0 || b < 0) continue;
    result.add_edge(a, b, g.is_colored() ? std::optional<int>(g.color(e)) : std::nullopt,
                    g.is_weighted() ? std::optional<long long>(g.weight(e)) : std::nullopt);
  }
  if (g.is_colored()) result.set_num_colors(g.num_colors());
  for (const auto& [name, v] : g.anchors()) {
    if (ids[static_cast<std::size_t>(v)] >= 0) result.set_anchor(name, ids[static_cast<std::size_t>(v)]);
  }
  if (new_id) *new_id = ids;
  return result;
}

inline Graph remove_vertices(const Graph& g, const std::vector<int>& gone) {
  std::vector<bool> keep(static_cast<std::size_t>(g.num_vertices()), true);
  for (int v : gone) keep.at(static_cast<std::size_t>(v)) = false;
  return induced_subgraph(g, keep);
}

/// Spanning subgraph keeping only edges with keep_edge[e] set.
inline Graph edge_subgraph(const Graph& g, const std::vector<bool>& keep_edge) {
  Graph result(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!keep_edge.at(static_cast<std::size_t>(e))) continue;
    const Edge& ed = g.edge(e);
    result.add_edge(ed.u, ed.v, g.is_colored() ? std::optional<int>(g.color(e)) : std::nullopt,
                    g.is_weighted() ? std::optional<long long>(g.weight(e)) : std::nullopt);
  }
  if (g.is_colored()) result.set_num_colors(g.num_colors());
  for (const auto& [name, v] : g.anchors()) result.set_anchor(name, v);
  return result;
}

/// Same graph without colors, weights or anchors.
inline Graph underlying_graph(const Graph& g) {
  Graph result(g.num_vertices());
  for (const Edge& e : g.edges()) result.add_edge(e.u, e.v);
  return result;
}

/// Vertex-disjoint union; vertices of b are shifted by |V(a)|.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph result(a.num_vertices() + b.num_vertices());
  for (const Edge& e : a.edges()) result.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) result.add_edge(e.u + a.num_vertices(), e.v + a.num_vertices());
  return result;
}

/// Vertex i of the result is edge i of g; two vertices are adjacent iff the
/// edges share an endpoint. Edges are emitted per shared vertex of g in
/// vertex order, then by incidence order.
inline Graph line_graph(const Graph& g) {
  Graph result(g.num_edges());
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) result.add_edge(inc[i].edge, inc[j].edge);
    }
  }
  return result;
}

/// Callback deciding the color of segment `segment` (0..t) of subdivided edge `edge`.
using SubdivisionColoring = std::function<int(int edge, int segment)>;

/// Replaces each edge by a path with t inner vertices. Original vertices keep
/// their ids; inner vertices of edge e (oriented from its smaller endpoint)
/// are appended in edge order. With a coloring callback the result carries
/// `num_colors` colors; without one a colored input copies each edge's color
/// to its segments. Weights are dropped.
inline Graph subdivide(const Graph& g, int t, const SubdivisionColoring& coloring = {},
                       int num_colors = 0) {
  if (t < 0) throw DomainError("subdivision count must be nonnegative");
  Graph result(g.num_vertices() + t * g.num_edges());
  int next = g.num_vertices();
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    int prev = ed.u;
    for (int s = 0; s <= t; ++s) {
      int cur = s == t ? ed.v : next++;
      if (coloring) {
        result.add_colored_edge(prev, cur, coloring(e, s));
      } else if (g.is_colored()) {
        result.add_colored_edge(prev, cur, g.color(e));
      } else {
        result.add_edge(prev, cur);
      }
      prev = cur;
    }
  }
  if (coloring && num_colors > 0) result.set_num_colors(num_colors);
  if (!coloring && g.is_colored()) result.set_num_colors(g.num_colors());
  for (const auto& [name, v] : g.anchors()) result.set_anchor(name, v);
  return result;
}

struct Quotient {
  Graph graph;              // one vertex per block (block order of the partition)
  bool degenerate = false;  // some block contains two adjacent vertices
  bool edge_injective = true;  // at most one edge between any two blocks
};

inline Quotient quotient(const Graph& h, const Partition& rho) {
  if (rho.num_elements() != h.num_vertices()) throw DomainError("partition size does not match graph");
  Quotient q;
  q.graph = Graph(rho.num_blocks());
  std::map<std::pair<int, int>, int> multiplicity;
  for (const Edge& e : h.edges()) {
    int a = rho.block_of(e.u);
    int b = rho.block_of(e.v);
    if (a == b) {
      q.degenerate = true;
      continue;
    }
    if (a > b) std::swap(a, b);
    if (++multiplicity[{a, b}] == 1) {
      q.graph.add_edge(a, b);
    } else {
      q.edge_injective = false;
    }
  }
  return q;
}

// ---------------------------------------------------------------------------
// Vertex covers

enum class CoverMode { exact, weak };

namespace detail {

inline bool covers(const Graph& g, const std::vector<int>& set) {
  std::vector<bool> in(static_cast<std::size_t>(g.num_vertices()), false);
  for (int v : set) in[static_cast<std::size_t>(v)] = true;
  for (const Edge& e : g.edges()) {
    if (!in[static_cast<std::size_t>(e.u)] && !in[static_cast<std::size_t>(e.v)]) return false;
  }
  return true;
}

inline bool is_isolated_edge(const Graph& g, const Edge& e) { return g.degree(e.u) == 1 && g.degree(e.v) == 1; }

}  // namespace detail

inline bool is_vertex_cover(const Graph& g, const std::vector<int>& set) { return detail::covers(g, set); }

/// Minimum vertex cover by exhaustive search over subsets of increasing size;
/// the first cover found in lexicographic order is returned.
inline std::vector<int> min_vertex_cover(const Graph& g, const Caps& caps = default_caps()) {
  // Vertices without edges never belong to a minimum cover.
  std::vector<int> candidates;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) candidates.push_back(v);
  }
  if (static_cast<int>(candidates.size()) > caps.max_cover_vertices) {
    throw CapExceeded("vertex-cover search: " + std::to_string(candidates.size()) +
                      " non-isolated vertices exceed the cap of " + std::to_string(caps.max_cover_vertices));
  }
  const int m = static_cast<int>(candidates.size());
  std::vector<int> chosen;
  std::function<bool(int, int)> rec = [&](int start, int remaining) -> bool {
    if (remaining == 0) return detail::covers(g, chosen);
    for (int i = start; i <= m - remaining; ++i) {
      chosen.push_back(candidates[static_cast<std::size_t>(i)]);
      if (rec(i + 1, remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= m; ++size) {
    chosen.clear();
    if (rec(0, size)) return chosen;
  }
  return candidates;
}

/// g without its isolated-edge components (and without isolated vertices).
inline Graph without_isolated_edges(const Graph& g) {
  std::vector<bool> keep(static_cast<std::size_t>(g.num_vertices()), false);
  for (const Edge& e : g.edges()) {
    if (!detail::is_isolated_edge(g, e)) keep[static_cast<std::size_t>(e.u)] = keep[static_cast<std::size_t>(e.v)] = true;
  }
  return induced_subgraph(g, keep);
}

inline int vertex_cover_number(const Graph& g, CoverMode mode, const Caps& caps = default_caps()) {
  if (mode == CoverMode::exact) return static_cast<int>(min_vertex_cover(g, caps).size());
  return static_cast<int>(min_vertex_cover(without_isolated_edges(g), caps).size());
}

// ---------------------------------------------------------------------------
// Pattern constructors

enum class PatternKind {
  path,             // P_k: k edges
  cycle,            // C_k
  clique,           // K_k
  biclique,         // K_{a,b}
  star,             // K_{1,k}
  empty,            // k isolated vertices
  matching,         // k*K_2
  triangles,        // k*K_3
  wedges,           // k*P_2
  windmill,         // W_k
  subdivided_star,  // SS_k
  collar,           // collar of length l
  barbed_wire,      // barbed wire of length l
  gadget_g,         // weight-removal gadget G_i
  gadget_h,         // weight-removal gadget H_i built from G_W (params W, i)
};

inline PatternKind parse_pattern_kind(const std::string& name) {
  static const std::map<std::string, PatternKind> names = {
      {"P", PatternKind::path},           {"path", PatternKind::path},
      {"C", PatternKind::cycle},          {"cycle", PatternKind::cycle},
      {"K", PatternKind::clique},         {"clique", PatternKind::clique},
      {"Kab", PatternKind::biclique},     {"biclique", PatternKind::biclique},
      {"S", PatternKind::star},           {"star", PatternKind::star},
      {"E", PatternKind::empty},          {"empty", PatternKind::empty},
      {"mK2", PatternKind::matching},     {"matching", PatternKind::matching},
      {"mK3", PatternKind::triangles},    {"triangles", PatternKind::triangles},
      {"mP2", PatternKind::wedges},       {"wedges", PatternKind::wedges},
      {"W", PatternKind::windmill},       {"windmill", PatternKind::windmill},
      {"SS", PatternKind::subdivided_star}, {"subdivided-star", PatternKind::subdivided_star},
      {"collar", PatternKind::collar},    {"barbed", PatternKind::barbed_wire},
      {"barbed-wire", PatternKind::barbed_wire},
      {"G", PatternKind::gadget_g},       {"gadget-g", PatternKind::gadget_g},
      {"H", PatternKind::gadget_h},       {"gadget-h", PatternKind::gadget_h},
  };
  auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown pattern kind: " + name);
  return it->second;
}

namespace detail {

inline void add_clique(Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
  }
}

inline int add_path(Graph& g, int from, int to, int length, std::vector<int>* edge_ids = nullptr) {
  int prev = from;
  for (int s = 0; s < length; ++s) {
    int cur = s + 1 == length ? to : g.add_vertex();
    int id = g.add_edge(prev, cur);
    if (edge_ids) edge_ids->push_back(id);
    prev = cur;
  }
  return prev;
}

/// G_i with anchors a1..ai, b1..bi and marked edges e1..ei.
inline Graph weight_gadget(int i) {
  Graph g(2);
  g.set_anchor("a1", 0);
  g.set_anchor("b1", 1);
  g.set_edge_mark("e1", g.add_edge(0, 1));
  for (int j = 1; j < i; ++j) {
    int a = g.add_vertex();
    int b = g.add_vertex();
    g.add_edge(a, g.anchor("a" + std::to_string(j)));
    g.add_edge(b, g.anchor("b" + std::to_string(j)));
    std::vector<int> ids;
    add_path(g, a, b, 2 * j + 1, &ids);
    g.set_anchor("a" + std::to_string(j + 1), a);
    g.set_anchor("b" + std::to_string(j + 1), b);
    g.set_edge_mark("e" + std::to_string(j + 1), ids[static_cast<std::size_t>(j)]);
  }
  g.set_anchor("a", g.anchor("a" + std::to_string(i)));
  g.set_anchor("b", g.anchor("b" + std::to_string(i)));
  return g;
}

}  // namespace detail

/// Builds a named pattern graph. Vertex numbering per kind:
///  - path/cycle: consecutive 0..; star/windmill/subdivided star: center 0,
///    matched pairs (2i-1, 2i) with 2i-1 the vertex next to the center in SS_k;
///  - biclique K_{a,b}: sides 0..a-1 and a..a+b-1; packings: component by component;
///  - collar(l): u = 0, K_4 copy C_i on 4i-3..4i with a_i = 4i-3, b_i = 4i-2, v = 4l+1;
///  - barbed wire(l): path vertices 0..2l+2 (u = 0, v = 2l+2), the two leaves
///    of path vertex 2i (i = 1..l) appended in order;
///  - gadget G_i: anchors a_j, b_j (and a, b = a_i, b_i), marked edges e_j;
///  - gadget H_i (params W, i): G_W with e_W..e_{i+1} removed.
inline Graph make_pattern(PatternKind kind, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw DomainError("pattern expects " + std::to_string(count) + " parameter(s)");
    }
  };
  auto at_least = [](int value, int bound, const char* what) {
    if (value < bound) throw DomainError(std::string(what) + " must be at least " + std::to_string(bound));
  };
  switch (kind) {
    case PatternKind::path: {
      need(1);
      at_least(params[0], 0, "path length");
      Graph g(params[0] + 1);
      for (int i = 0; i < params[0]; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case PatternKind::cycle: {
      need(1);
      at_least(params[0], 3, "cycle length");
      Graph g(params[0]);
      for (int i = 0; i < params[0]; ++i) g.add_edge(i, (i + 1) % params[0]);
      return g;
    }
    case PatternKind::clique: {
      need(1);
      at_least(params[0], 1, "clique size");
      Graph g(params[0]);
      std::vector<int> vs(static_cast<std::size_t>(params[0]));
      std::iota(vs.begin(), vs.end(), 0);
      detail::add_clique(g, vs);
      return g;
    }
    case PatternKind::biclique: {
      need(2);
      at_least(params[0], 1, "biclique side");
      at_least(params[1], 1, "biclique side");
      Graph g(params[0] + params[1]);
      for (int a = 0; a < params[0]; ++a) {
        for (int b = 0; b < params[1]; ++b) g.add_edge(a, params[0] + b);
      }
      return g;
    }
    case PatternKind::star: {
      need(1);
      at_least(params[0], 1, "star size");
      Graph g(params[0] + 1);
      for (int i = 1; i <= params[0]; ++i) g.add_edge(0, i);
      return g;
    }
    case PatternKind::empty: {
      need(1);
      at_least(params[0], 0, "vertex count");
      return Graph(params[0]);
    }
    case PatternKind::matching:
    case PatternKind::triangles:
    case PatternKind::wedges: {
      need(1);
      at_least(params[0], 1, "packing size");
      const int part = kind == PatternKind::matching ? 2 : 3;
      Graph g(part * params[0]);
      for (int c = 0; c < params[0]; ++c) {
        int base = part * c;
        g.add_edge(base, base + 1);
        if (kind == PatternKind::triangles) {
          g.add_edge(base + 1, base + 2);
          g.add_edge(base, base + 2);
        } else if (kind == PatternKind::wedges) {
          g.add_edge(base + 1, base + 2);
        }
      }
      return g;
    }
    case PatternKind::windmill:
    case PatternKind::subdivided_star: {
      need(1);
      at_least(params[0], 1, "size");
      Graph g(2 * params[0] + 1);
      for (int i = 1; i <= params[0]; ++i) {
        g.add_edge(0, 2 * i - 1);
        if (kind == PatternKind::windmill) g.add_edge(0, 2 * i);
        g.add_edge(2 * i - 1, 2 * i);
      }
      return g;
    }
    case PatternKind::collar: {
      need(1);
      at_least(params[0], 1, "collar length");
      const int l = params[0];
      Graph g(4 * l + 2);
      for (int i = 1; i <= l; ++i) {
        int base = 4 * i - 3;
        detail::add_clique(g, {base, base + 1, base + 2, base + 3});
        g.set_anchor("a" + std::to_string(i), base);
        g.set_anchor("b" + std::to_string(i), base + 1);
      }
      g.add_edge(0, 1);
      for (int i = 1; i < l; ++i) g.add_edge(4 * i - 2, 4 * i + 1);
      g.add_edge(4 * l - 2, 4 * l + 1);
      g.set_anchor("u", 0);
      g.set_anchor("v", 4 * l + 1);
      return g;
    }
    case PatternKind::barbed_wire: {
      need(1);
      at_least(params[0], 1, "barbed wire length");
      const int l = params[0];
      Graph g(2 * l + 3);
      for (int i = 0; i < 2 * l + 2; ++i) g.add_edge(i, i + 1);
      for (int i = 1; i <= l; ++i) {
        g.add_edge(2 * i, g.add_vertex());
        g.add_edge(2 * i, g.add_vertex());
      }
      g.set_anchor("u", 0);
      g.set_anchor("v", 2 * l + 2);
      return g;
    }
    case PatternKind::gadget_g: {
      need(1);
      at_least(params[0], 1, "gadget index");
      return detail::weight_gadget(params[0]);
    }
    case PatternKind::gadget_h: {
      need(2);
      at_least(params[1], 1, "gadget index");
      if (params[1] > params[0]) throw DomainError("gadget H_i requires i <= W");
      Graph full = detail::weight_gadget(params[0]);
      std::vector<bool> keep(static_cast<std::size_t>(full.num_edges()), true);
      for (int j = params[1] + 1; j <= params[0]; ++j) {
        keep[static_cast<std::size_t>(full.edge_mark("e" + std::to_string(j)))] = false;
      }
      Graph h = edge_subgraph(full, keep);
      // Surviving marked edges keep their identity under the new numbering.
      for (int j = 1; j <= params[1]; ++j) {
        const Edge& e = full.edge(full.edge_mark("e" + std::to_string(j)));
        h.set_edge_mark("e" + std::to_string(j), h.edge_id(e.u, e.v));
      }
      return h;
    }
  }
  throw DomainError("unhandled pattern kind");
}

inline Graph make_pattern(const std::string& kind, const std::vector<int>& params) {
  return make_pattern(parse_pattern_kind(kind), params);
}

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   v <n>
//   [k <colors>]          declared color count, only when above the largest used color
//   e <u> <v> [c=<int>] [w=<int>]

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::optional<Graph> g;
  int declared_colors = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("line " + std::to_string(line_no) + ": " + why);
  };
  auto parse_int = [&](const std::string& token) -> long long {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + token + "'");
    }
    if (used != token.size()) fail("expected an integer, got '" + token + "'");
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == '#') continue;
    std::vector<std::string> rest;
    for (std::string tok; fields >> tok;) rest.push_back(tok);
    if (tag == "v") {
      if (g) fail("duplicate 'v' header");
      if (rest.size() != 1) fail("'v' expects one vertex count");
      long long n = parse_int(rest[0]);
      if (n < 0) fail("negative vertex count");
      g.emplace(static_cast<int>(n));
    } else if (tag == "k") {
      if (!g) fail("'k' before 'v' header");
      if (rest.size() != 1) fail("'k' expects one color count");
      declared_colors = static_cast<int>(parse_int(rest[0]));
    } else if (tag == "e") {
      if (!g) fail("edge before 'v' header");
      if (rest.size() < 2 || rest.size() > 4) fail("malformed edge line");
      long long u = parse_int(rest[0]);
      long long v = parse_int(rest[1]);
      if (u < 0 || v < 0 || u >= g->num_vertices() || v >= g->num_vertices()) fail("vertex out of range");
      if (u == v) fail("self-loop");
      if (g->has_edge(static_cast<int>(u), static_cast<int>(v))) fail("duplicate edge");
      std::optional<int> color;
      std::optional<long long> weight;
      for (std::size_t i = 2; i < rest.size(); ++i) {
        const std::string& attr = rest[i];
        if (attr.rfind("c=", 0) == 0 && !color) {
          color = static_cast<int>(parse_int(attr.substr(2)));
          if (*color < 1) fail("colors are 1-based");
        } else if (attr.rfind("w=", 0) == 0 && !weight) {
          weight = parse_int(attr.substr(2));
          if (*weight < 0) fail("negative weight");
        } else {
          fail("unknown or repeated attribute '" + attr + "'");
        }
      }
      try {
        g->add_edge(static_cast<int>(u), static_cast<int>(v), color, weight);
      } catch (const DomainError& e) {
        fail(e.what());
      }
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (!g) throw ParseError("missing 'v' header");
  if (declared_colors > 0) {
    try {
      g->set_num_colors(declared_colors);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  return *g;
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "v " << g.num_vertices() << "\n";
  int max_used = 0;
  for (int e = 0; e < g.num_edges(); ++e) max_used = std::max(max_used, g.color(e));
  if (g.num_colors() > max_used) out << "k " << g.num_colors() << "\n";
  for (const auto& [edge, color, weight] : g.canonical_edges()) {
    out << "e " << edge.u << " " << edge.v;
    if (g.is_colored()) out << " c=" << color;
    if (g.is_weighted()) out << " w=" << weight;
    out << "\n";
  }
  return out.str();
}

}  // namespace edginj
