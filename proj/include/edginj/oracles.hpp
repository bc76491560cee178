#pragma once

// Brute-force reference counters. Everything here is exponential and guarded
// by Caps; these are the ground truth the polynomial algorithms and the
// reduction pipelines are tested against.

#include "edginj/common.hpp"
#include "edginj/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace edginj {

enum class MapKind { hom, emb, edginj };

namespace detail {

class StepBudget {
 public:
  StepBudget(std::uint64_t limit, const char* what) : limit_(limit), what_(what) {}
  void tick() {
    if (++steps_ > limit_) {
      throw CapExceeded(std::string(what_) + ": search exceeded " + std::to_string(limit_) + " steps");
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
  const char* what_;
};

/// Dense adjacency lookup: id of host edge {a,b} or -1.
class EdgeMatrix {
 public:
  explicit EdgeMatrix(const Graph& g) : n_(g.num_vertices()), ids_(static_cast<std::size_t>(n_) * n_, -1) {
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      ids_[index(ed.u, ed.v)] = e;
      ids_[index(ed.v, ed.u)] = e;
    }
  }
  int operator()(int a, int b) const { return ids_[index(a, b)]; }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
  int n_;
  std::vector<int> ids_;
};

/// Greedy connected order: each next vertex has the most already-placed
/// neighbors (ties: higher degree, then lower id).
inline std::vector<int> search_order(const Graph& h) {
  const int n = h.num_vertices();
  std::vector<int> order;
  std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || placed_nbrs[static_cast<std::size_t>(v)] > placed_nbrs[static_cast<std::size_t>(best)] ||
          (placed_nbrs[static_cast<std::size_t>(v)] == placed_nbrs[static_cast<std::size_t>(best)] &&
           h.degree(v) > h.degree(best))) {
        best = v;
      }
    }
    placed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    for (int w : h.neighbors(best)) ++placed_nbrs[static_cast<std::size_t>(w)];
  }
  return order;
}

/// Shared backtracking enumerator for hom / emb / edge-injective maps.
class MapSearch {
 public:
  using Visitor = std::function<void(const std::vector<int>& phi, const std::vector<int>& edge_image)>;

  MapSearch(const Graph& h, const Graph& g, MapKind kind, const Caps& caps, const char* what)
      : h_(h), g_(g), kind_(kind), matrix_(g), budget_(caps.max_steps, what) {
    if (h.num_vertices() > caps.max_pattern_vertices) {
      throw CapExceeded(std::string(what) + ": pattern has " + std::to_string(h.num_vertices()) +
                        " vertices, cap is " + std::to_string(caps.max_pattern_vertices));
    }
    order_ = search_order(h);
    std::vector<int> position(static_cast<std::size_t>(h.num_vertices()));
    for (std::size_t i = 0; i < order_.size(); ++i) position[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    parent_.assign(order_.size(), -1);
    back_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      int v = order_[i];
      for (const auto& inc : h.incident(v)) {
        if (position[static_cast<std::size_t>(inc.neighbor)] < static_cast<int>(i)) {
          back_[i].push_back({inc.neighbor, inc.edge});
          if (parent_[i] < 0) parent_[i] = inc.neighbor;
        }
      }
    }
    phi_.assign(static_cast<std::size_t>(h.num_vertices()), -1);
    edge_image_.assign(static_cast<std::size_t>(h.num_edges()), -1);
    vertex_used_.assign(static_cast<std::size_t>(g.num_vertices()), 0);
    edge_used_.assign(static_cast<std::size_t>(g.num_edges()), 0);
  }

  std::uint64_t count() {
    std::uint64_t total = 0;
    run(0, [&](const std::vector<int>&, const std::vector<int>&) { ++total; });
    return total;
  }

  /// Σ over maps of the product of image-edge weights.
  Count weighted_count() {
    if (!g_.is_weighted()) throw DomainError("weighted count needs a weighted host");
    Count total = 0;
    run(0, [&](const std::vector<int>&, const std::vector<int>& image) {
      Count product = 1;
      for (int e : image) {
        product *= g_.weight(e);
        if (product == 0) return;
      }
      total += product;
    });
    return total;
  }

  void visit(const Visitor& f) { run(0, f); }

 private:
  void run(std::size_t i, const Visitor& f) {
    budget_.tick();
    if (i == order_.size()) {
      f(phi_, edge_image_);
      return;
    }
    const int v = order_[i];
    auto try_candidate = [&](int x) {
      if (kind_ == MapKind::emb && vertex_used_[static_cast<std::size_t>(x)]) return;
      std::size_t assigned = 0;
      bool ok = true;
      for (const auto& [w, he] : back_[i]) {
        int ge = matrix_(x, phi_[static_cast<std::size_t>(w)]);
        if (ge < 0 || (kind_ == MapKind::edginj && edge_used_[static_cast<std::size_t>(ge)])) {
          ok = false;
          break;
        }
        edge_image_[static_cast<std::size_t>(he)] = ge;
        ++edge_used_[static_cast<std::size_t>(ge)];
        ++assigned;
      }
      if (ok) {
        phi_[static_cast<std::size_t>(v)] = x;
        ++vertex_used_[static_cast<std::size_t>(x)];
        run(i + 1, f);
        --vertex_used_[static_cast<std::size_t>(x)];
        phi_[static_cast<std::size_t>(v)] = -1;
      }
      for (std::size_t j = 0; j < assigned; ++j) {
        --edge_used_[static_cast<std::size_t>(edge_image_[static_cast<std::size_t>(back_[i][j].second)])];
      }
    };
    if (parent_[i] >= 0) {
      for (const auto& inc : g_.incident(phi_[static_cast<std::size_t>(parent_[i])])) try_candidate(inc.neighbor);
    } else {
      for (int x = 0; x < g_.num_vertices(); ++x) try_candidate(x);
    }
  }

  const Graph& h_;
  const Graph& g_;
  MapKind kind_;
  EdgeMatrix matrix_;
  StepBudget budget_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<std::vector<std::pair<int, int>>> back_;
  std::vector<int> phi_;
  std::vector<int> edge_image_;
  std::vector<int> vertex_used_;
  std::vector<int> edge_used_;
};

}  // namespace detail

inline Count count_maps(const Graph& h, const Graph& g, MapKind kind, const Caps& caps = default_caps()) {
  return Count(detail::MapSearch(h, g, kind, caps, "map enumeration").count());
}

inline Count count_hom(const Graph& h, const Graph& g, const Caps& caps = default_caps()) {
  return count_maps(h, g, MapKind::hom, caps);
}

inline Count count_emb(const Graph& h, const Graph& g, const Caps& caps = default_caps()) {
  return count_maps(h, g, MapKind::emb, caps);
}

inline Count count_edginj(const Graph& h, const Graph& g, const Caps& caps = default_caps()) {
  return count_maps(h, g, MapKind::edginj, caps);
}

inline Count count_edginj_weighted(const Graph& h, const Graph& g, const Caps& caps = default_caps()) {
  if (!g.is_weighted()) throw DomainError("count_edginj_weighted: host has no weights");
  return detail::MapSearch(h, g, MapKind::edginj, caps, "weighted enumeration").weighted_count();
}

/// Calls f(phi, edge_image) for every map of the given kind.
inline void for_each_map(const Graph& h, const Graph& g, MapKind kind,
                         const std::function<void(const std::vector<int>&, const std::vector<int>&)>& f,
                         const Caps& caps = default_caps()) {
  detail::MapSearch(h, g, kind, caps, "map enumeration").visit(f);
}

// ---------------------------------------------------------------------------
// Matchings

/// Number of k-matchings; with `colorful`, g must carry exactly k colors and
/// each matching takes one edge from every color class.
inline Count count_matchings(const Graph& g, int k, bool colorful, const Caps& caps = default_caps()) {
  if (k < 0) throw DomainError("matching size must be nonnegative");
  detail::StepBudget budget(caps.max_steps, "matching enumeration");
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  std::uint64_t total = 0;
  if (colorful) {
    if (!g.is_colored()) throw DomainError("colorful matchings need a colored graph");
    if (g.num_colors() != k) throw DomainError("colorful matchings need exactly k colors");
    std::vector<std::vector<int>> classes;
    for (int c = 1; c <= k; ++c) classes.push_back(g.color_class(c));
    // Smallest classes first for pruning.
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      budget.tick();
      if (i == classes.size()) {
        ++total;
        return;
      }
      for (int e : classes[i]) {
        const Edge& ed = g.edge(e);
        if (used[static_cast<std::size_t>(ed.u)] || used[static_cast<std::size_t>(ed.v)]) continue;
        used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = 1;
        rec(i + 1);
        used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = 0;
      }
    };
    rec(0);
    return Count(total);
  }
  const int m = g.num_edges();
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    budget.tick();
    if (remaining == 0) {
      ++total;
      return;
    }
    for (int e = start; e <= m - remaining; ++e) {
      const Edge& ed = g.edge(e);
      if (used[static_cast<std::size_t>(ed.u)] || used[static_cast<std::size_t>(ed.v)]) continue;
      used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = 1;
      rec(e + 1, remaining - 1);
      used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = 0;
    }
  };
  rec(0, k);
  return Count(total);
}

// ---------------------------------------------------------------------------
// Perfect matchings

namespace detail {

/// Memoized perfect-matching counter. Each count is a vector indexed by the
/// number of marked edges used (a single entry when nothing is marked).
class PerfectMatchingCounter {
 public:
  PerfectMatchingCounter(const Graph& g, const std::vector<bool>& marked, const Caps& caps)
      : g_(g), marked_(marked), words_((static_cast<std::size_t>(g.num_vertices()) + 63) / 64),
        budget_(caps.max_steps, "perfect-matching search") {
    if (g.num_vertices() > caps.max_pm_vertices) {
      throw CapExceeded("perfect matchings: " + std::to_string(g.num_vertices()) +
                        " vertices exceed the cap of " + std::to_string(caps.max_pm_vertices));
    }
    for (bool b : marked) max_marked_ += b ? 1 : 0;
  }

  std::vector<Count> run() {
    Key all(words_, 0);
    for (int v = 0; v < g_.num_vertices(); ++v) set(all, v);
    return count(all);
  }

 private:
  using Key = std::vector<std::uint64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 0x9e3779b97f4a7c15ULL;
      for (auto w : k) h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  static bool has(const Key& k, int v) { return (k[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U; }
  static void set(Key& k, int v) { k[static_cast<std::size_t>(v) / 64] |= std::uint64_t(1) << (v % 64); }
  static void clear(Key& k, int v) { k[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t(1) << (v % 64)); }

  std::vector<Count> zero() const { return std::vector<Count>(static_cast<std::size_t>(max_marked_ + 1), 0); }
  std::vector<Count> one() const {
    auto r = zero();
    r[0] = 1;
    return r;
  }

  std::vector<Count> multiply(const std::vector<Count>& a, const std::vector<Count>& b) const {
    auto r = zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }

  std::vector<Count> count(const Key& alive) {
    budget_.tick();
    int first = -1;
    for (int v = 0; v < g_.num_vertices(); ++v) {
      if (has(alive, v)) {
        first = v;
        break;
      }
    }
    if (first < 0) return one();
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;

    // Component of `first`; split when alive is disconnected.
    Key comp(words_, 0);
    std::vector<int> stack{first};
    set(comp, first);
    int size = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& inc : g_.incident(v)) {
        if (has(alive, inc.neighbor) && !has(comp, inc.neighbor)) {
          set(comp, inc.neighbor);
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::vector<Count> result;
    if (size % 2 == 1) {
      result = zero();
    } else if (comp != alive) {
      Key rest = alive;
      for (std::size_t w = 0; w < words_; ++w) rest[w] &= ~comp[w];
      auto a = count(comp);
      bool nonzero = false;
      for (const auto& c : a) nonzero = nonzero || c != 0;
      result = nonzero ? multiply(a, count(rest)) : zero();
    } else {
      // Branch on a minimum-degree vertex of the component.
      int best = -1;
      int best_degree = 0;
      for (int v = 0; v < g_.num_vertices(); ++v) {
        if (!has(comp, v)) continue;
        int d = 0;
        for (const auto& inc : g_.incident(v)) d += has(alive, inc.neighbor) ? 1 : 0;
        if (best < 0 || d < best_degree) {
          best = v;
          best_degree = d;
        }
      }
      result = zero();
      Key next = alive;
      clear(next, best);
      for (const auto& inc : g_.incident(best)) {
        if (!has(alive, inc.neighbor)) continue;
        clear(next, inc.neighbor);
        auto sub = count(next);
        set(next, inc.neighbor);
        const std::size_t shift = marked_.empty() || !marked_[static_cast<std::size_t>(inc.edge)] ? 0 : 1;
        for (std::size_t t = 0; t + shift < result.size(); ++t) result[t + shift] += sub[t];
      }
    }
    memo_.emplace(alive, result);
    return result;
  }

  const Graph& g_;
  std::vector<bool> marked_;
  std::size_t words_;
  int max_marked_ = 0;
  StepBudget budget_;
  std::unordered_map<Key, std::vector<Count>, KeyHash> memo_;
};

}  // namespace detail

inline Count count_perfect_matchings(const Graph& g, const Caps& caps = default_caps()) {
  if (g.num_vertices() % 2 == 1) return 0;
  return detail::PerfectMatchingCounter(g, {}, caps).run()[0];
}

/// Entry t = number of perfect matchings using exactly t of the marked edges.
inline std::vector<Count> count_perfect_matchings_by_marked(const Graph& g, const std::vector<int>& marked_edges,
                                                            const Caps& caps = default_caps()) {
  std::vector<bool> marked(static_cast<std::size_t>(g.num_edges()), false);
  for (int e : marked_edges) marked.at(static_cast<std::size_t>(e)) = true;
  if (g.num_vertices() % 2 == 1) {
    return std::vector<Count>(marked_edges.size() + 1, 0);
  }
  return detail::PerfectMatchingCounter(g, marked, caps).run();
}

// ---------------------------------------------------------------------------
// Odd edge sets

/// Edge subsets S in which every vertex has odd degree. Returns a vector
/// indexed by |S|; the total is the sum of its entries.
inline std::vector<Count> count_odd_edge_sets_by_size(const Graph& g, const Caps& caps = default_caps()) {
  const int m = g.num_edges();
  if (m > caps.max_subset_edges) {
    throw CapExceeded("odd edge sets: " + std::to_string(m) + " edges exceed the cap of " +
                      std::to_string(caps.max_subset_edges));
  }
  if (g.num_vertices() > 64) throw CapExceeded("odd edge sets: more than 64 vertices");
  std::vector<Count> by_size(static_cast<std::size_t>(m + 1), 0);
  const std::uint64_t target =
      g.num_vertices() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.num_vertices()) - 1;
  std::vector<std::uint64_t> flip(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    flip[static_cast<std::size_t>(e)] = (std::uint64_t(1) << g.edge(e).u) | (std::uint64_t(1) << g.edge(e).v);
  }
  // Gray-code walk: consecutive subsets differ in one edge.
  std::uint64_t parity = 0;
  int size = 0;
  std::vector<char> in(static_cast<std::size_t>(m), 0);
  if (parity == target) ++by_size[0];
  const std::uint64_t total = std::uint64_t(1) << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    int e = __builtin_ctzll(i);
    parity ^= flip[static_cast<std::size_t>(e)];
    in[static_cast<std::size_t>(e)] ^= 1;
    size += in[static_cast<std::size_t>(e)] ? 1 : -1;
    if (parity == target) ++by_size[static_cast<std::size_t>(size)];
  }
  return by_size;
}

inline Count count_odd_edge_sets_enum(const Graph& g, const Caps& caps = default_caps()) {
  Count total = 0;
  for (const auto& c : count_odd_edge_sets_by_size(g, caps)) total += c;
  return total;
}

// ---------------------------------------------------------------------------
// Derived quantities

enum class WalkKind { cycle, path };

/// Edge-disjoint k-cycles (closed trails) or k-paths (open trails with k
/// edges), counted as unrooted, unoriented objects.
inline Count count_edge_disjoint(const Graph& g, int k, WalkKind kind, const Caps& caps = default_caps()) {
  if (kind == WalkKind::cycle) {
    if (k < 3) throw DomainError("edge-disjoint cycles need k >= 3");
    return exact_div(count_edginj(make_pattern(PatternKind::cycle, {k}), g, caps), Count(2 * k),
                     "edge-disjoint cycles");
  }
  if (k < 1) throw DomainError("edge-disjoint paths need k >= 1");
  return exact_div(count_edginj(make_pattern(PatternKind::path, {k}), g, caps), Count(2), "edge-disjoint paths");
}

/// Simple cycles of length k (as subgraphs).
inline Count count_simple_cycles(const Graph& g, int k, const Caps& caps = default_caps()) {
  if (k < 3) throw DomainError("cycles need k >= 3");
  return exact_div(count_emb(make_pattern(PatternKind::cycle, {k}), g, caps), Count(2 * k), "simple cycles");
}

/// Σ over loop-free edge-injective partitions ρ of V(h) of Emb(h/ρ, g).
inline Count count_edginj_via_partition_sum(const Graph& h, const Graph& g, const Caps& caps = default_caps()) {
  if (h.num_vertices() > caps.max_partition_vertices) {
    throw CapExceeded("partition sum: " + std::to_string(h.num_vertices()) + " pattern vertices exceed the cap of " +
                      std::to_string(caps.max_partition_vertices));
  }
  Count total = 0;
  for_each_set_partition(h.num_vertices(), [&](const std::vector<int>& rgs, int) {
    Quotient q = quotient(h, Partition::from_rgs(rgs));
    if (q.degenerate || !q.edge_injective) return;
    total += count_emb(q.graph, g, caps);
  });
  return total;
}

/// Isomorphism test by backtracking with degree pruning.
inline bool is_isomorphic(const Graph& a, const Graph& b, const Caps& caps = default_caps()) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const int n = a.num_vertices();
  if (n > caps.max_iso_vertices) {
    throw CapExceeded("isomorphism: " + std::to_string(n) + " vertices exceed the cap of " +
                      std::to_string(caps.max_iso_vertices));
  }
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  if (n == 0) return true;
  std::vector<int> order = detail::search_order(a);
  detail::EdgeMatrix ma(a), mb(b);
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  detail::StepBudget budget(caps.max_steps, "isomorphism search");
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    budget.tick();
    if (i == order.size()) return true;
    int v = order[i];
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<std::size_t>(x)] || db[static_cast<std::size_t>(x)] != da[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        int w = order[j];
        ok = (ma(v, w) >= 0) == (mb(x, phi[static_cast<std::size_t>(w)]) >= 0);
      }
      if (!ok) continue;
      phi[static_cast<std::size_t>(v)] = x;
      used[static_cast<std::size_t>(x)] = 1;
      if (rec(i + 1)) return true;
      used[static_cast<std::size_t>(x)] = 0;
    }
    return false;
  };
  return rec(0);
}

// ---------------------------------------------------------------------------
// Wedge packings

/// W[K] = number of K-matchings of the line graph of g (sets of K pairwise
/// edge-disjoint wedges), for K = 0..max_k. Each wedge is two edges paired at
/// their shared vertex: enumerate, for every non-pendant edge, whether it is
/// unused or paired at one of its endpoints; pendant edges are summed in
/// closed form per vertex.
inline std::vector<Count> count_wedge_sets(const Graph& g, int max_k, const Caps& caps = default_caps()) {
  const int n = g.num_vertices();
  std::vector<int> pendant(static_cast<std::size_t>(n), 0);
  std::vector<int> inner;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const bool lu = g.degree(ed.u) == 1;
    const bool lv = g.degree(ed.v) == 1;
    if (lu && lv) continue;  // an isolated edge can never be paired
    if (lu) {
      ++pendant[static_cast<std::size_t>(ed.v)];
    } else if (lv) {
      ++pendant[static_cast<std::size_t>(ed.u)];
    } else {
      inner.push_back(e);
    }
  }
  // pairings(c) = (c-1)!! for even c, 0 for odd c.
  std::vector<Count> pairings(static_cast<std::size_t>(g.num_edges() + 2), 0);
  pairings[0] = 1;
  for (std::size_t c = 2; c < pairings.size(); c += 2) pairings[c] = pairings[c - 2] * Count(c - 1);
  const std::size_t width = static_cast<std::size_t>(max_k + 1);
  // Per-vertex generating polynomial in the number of pairs, given c assigned inner edges.
  auto vertex_poly = [&](int v, int c) {
    std::vector<Count> poly(width, 0);
    const int l = pendant[static_cast<std::size_t>(v)];
    for (int j = 0; j <= l; ++j) {
      const int total = c + j;
      if (total % 2 == 1 || total / 2 > max_k) continue;
      poly[static_cast<std::size_t>(total / 2)] += binomial(l, j) * pairings[static_cast<std::size_t>(total)];
    }
    return poly;
  };
  auto multiply = [&](const std::vector<Count>& a, const std::vector<Count>& b) {
    std::vector<Count> r(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < width; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  };
  // Vertices are finalised once their last inner edge has been decided.
  std::vector<int> last_inner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    last_inner[static_cast<std::size_t>(g.edge(inner[i]).u)] = static_cast<int>(i);
    last_inner[static_cast<std::size_t>(g.edge(inner[i]).v)] = static_cast<int>(i);
  }
  std::vector<Count> base(width, 0);
  base[0] = 1;
  for (int v = 0; v < n; ++v) {
    if (last_inner[static_cast<std::size_t>(v)] < 0) base = multiply(base, vertex_poly(v, 0));
  }
  std::vector<Count> result(width, 0);
  std::vector<int> assigned(static_cast<std::size_t>(n), 0);
  detail::StepBudget budget(caps.max_steps, "wedge-set enumeration");
  std::function<void(std::size_t, const std::vector<Count>&)> rec = [&](std::size_t i, const std::vector<Count>& acc) {
    budget.tick();
    bool empty = true;
    for (const auto& c : acc) empty = empty && c == 0;
    if (empty) return;
    if (i == inner.size()) {
      for (std::size_t t = 0; t < width; ++t) result[t] += acc[t];
      return;
    }
    const Edge& ed = g.edge(inner[i]);
    for (int choice = 0; choice < 3; ++choice) {
      int at = choice == 1 ? ed.u : choice == 2 ? ed.v : -1;
      if (at >= 0) ++assigned[static_cast<std::size_t>(at)];
      std::vector<Count> next = acc;
      for (int w : {ed.u, ed.v}) {
        if (last_inner[static_cast<std::size_t>(w)] == static_cast<int>(i)) {
          next = multiply(next, vertex_poly(w, assigned[static_cast<std::size_t>(w)]));
        }
      }
      rec(i + 1, next);
      if (at >= 0) --assigned[static_cast<std::size_t>(at)];
    }
  };
  rec(0, base);
  return result;
}

/// EdgInj(K·P_2, g) = 2^K · K! · (number of K edge-disjoint wedge sets).
inline Count count_edginj_wedges(int k, const Graph& g, const Caps& caps = default_caps()) {
  if (k < 0) throw DomainError("wedge count must be nonnegative");
  return count_wedge_sets(g, k, caps)[static_cast<std::size_t>(k)] * power(2, static_cast<unsigned>(k)) * factorial(k);
}

}  // namespace edginj
