#pragma once

// Polynomial-time counting of edge-injective homomorphisms from patterns of
// bounded weak vertex-cover number: isolated-part reduction, equivalence
// classes of edge-injective partitions, class sizes, representatives and a
// small-cover embedding counter.

#include "edginj/common.hpp"
#include "edginj/graph.hpp"
#include "edginj/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace edginj {

struct ReducedPattern {
  Graph core;                   // no isolated vertices, no isolated-edge components
  int iso_vertices = 0;
  int removed_edges = 0;
  int original_edge_count = 0;

  /// Factor with EdgInj(h, g) = multiplier(g) · EdgInj(core, g).
  Count multiplier(const Graph& g) const {
    Count result = 1;
    for (int j = 0; j < removed_edges; ++j) {
      const long long free_edges = static_cast<long long>(g.num_edges()) - (original_edge_count - j) + 1;
      if (free_edges <= 0) return 0;
      result *= 2 * free_edges;
    }
    for (int i = 0; i < iso_vertices; ++i) result *= g.num_vertices();
    return result;
  }
};

inline ReducedPattern reduce_isolated(const Graph& h) {
  ReducedPattern r;
  r.original_edge_count = h.num_edges();
  std::vector<bool> keep(static_cast<std::size_t>(h.num_vertices()), true);
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) == 0) {
      keep[static_cast<std::size_t>(v)] = false;
      ++r.iso_vertices;
    }
  }
  for (const Edge& e : h.edges()) {
    if (h.degree(e.u) == 1 && h.degree(e.v) == 1) {
      keep[static_cast<std::size_t>(e.u)] = keep[static_cast<std::size_t>(e.v)] = false;
      ++r.removed_edges;
    }
  }
  r.core = induced_subgraph(underlying_graph(h), keep);
  return r;
}

// ---------------------------------------------------------------------------
// Equivalence classes

/// Blocks of ρ that meet the cover C; D is their union.
struct CoverSubPartition {
  std::vector<std::vector<int>> blocks;  // sorted, ordered by smallest vertex
  std::vector<int> domain;               // D, sorted

  friend bool operator==(const CoverSubPartition&, const CoverSubPartition&) = default;
  friend auto operator<=>(const CoverSubPartition&, const CoverSubPartition&) = default;
};

/// A color is a bitmask over the blocks of ρ_C. β is a set of pairwise
/// disjoint colors, stored sorted; the allocation maps β to its multiplicity.
using ColorSet = std::vector<unsigned>;
struct ColorAllocation {
  std::map<ColorSet, int> multiplicity;  // only entries > 0

  friend bool operator==(const ColorAllocation&, const ColorAllocation&) = default;
  friend auto operator<=>(const ColorAllocation&, const ColorAllocation&) = default;
};

struct EquivalenceClass {
  CoverSubPartition rho_c;
  ColorAllocation alloc;

  friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
  friend auto operator<=>(const EquivalenceClass&, const EquivalenceClass&) = default;
};

/// K(v): the blocks of ρ_C adjacent to v, as a bitmask.
inline unsigned color_of(int v, const CoverSubPartition& rho_c, const Graph& h) {
  if (std::binary_search(rho_c.domain.begin(), rho_c.domain.end(), v)) {
    throw DomainError("color_of: vertex lies in the cover sub-partition");
  }
  unsigned mask = 0;
  for (std::size_t b = 0; b < rho_c.blocks.size(); ++b) {
    for (int w : rho_c.blocks[b]) {
      if (h.has_edge(v, w)) mask |= 1U << b;
    }
  }
  return mask;
}

namespace detail {

inline std::vector<int> outside(const Graph& h, const CoverSubPartition& rho_c) {
  std::vector<int> result;
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (!std::binary_search(rho_c.domain.begin(), rho_c.domain.end(), v)) result.push_back(v);
  }
  return result;
}

/// k_K for every color present among the vertices outside D.
inline std::map<unsigned, int> color_counts(const Graph& h, const CoverSubPartition& rho_c) {
  std::map<unsigned, int> counts;
  for (int v : outside(h, rho_c)) ++counts[color_of(v, rho_c, h)];
  return counts;
}

/// ρ_C is usable iff no block holds adjacent vertices, any two blocks share
/// at most one edge, and no outside vertex has two neighbors in one block.
inline bool cover_partition_ok(const Graph& h, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(static_cast<std::size_t>(h.num_vertices()), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int v : blocks[b]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
  }
  std::map<std::pair<int, int>, int> between;
  for (const Edge& e : h.edges()) {
    int a = block_of[static_cast<std::size_t>(e.u)];
    int b = block_of[static_cast<std::size_t>(e.v)];
    if (a < 0 && b < 0) continue;
    if (a == b) return false;
    // an outside vertex is keyed by -(v + 1); two edges into one block clash
    if (a < 0) a = -(e.u + 1);
    if (b < 0) b = -(e.v + 1);
    if (++between[{std::min(a, b), std::max(a, b)}] > 1) return false;
  }
  return true;
}

}  // namespace detail

/// Calls f for every candidate class (ρ_C, 𝒦) with h and cover c: D ⊇ C
/// with |D| ≤ |C|², partitions of D whose blocks all meet C (loop-free and
/// edge-injective on H[D]), and allocations with Σ_{β∋K} 𝒦(β) = k_K for
/// every color K. Order: D by size then lexicographically, partitions in
/// restricted-growth order, allocations lexicographically.
inline void for_each_class(const Graph& h, const std::vector<int>& c,
                           const std::function<void(const EquivalenceClass&)>& f) {
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) == 0) throw DomainError("enumerate_classes: pattern has an isolated vertex");
  }
  for (const Edge& e : h.edges()) {
    if (h.degree(e.u) == 1 && h.degree(e.v) == 1) throw DomainError("enumerate_classes: pattern has an isolated edge");
  }
  if (!is_vertex_cover(h, c)) throw DomainError("enumerate_classes: not a vertex cover");
  std::vector<int> cover = c;
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  const int csize = static_cast<int>(cover.size());
  if (csize > 5) throw CapExceeded("enumerate_classes: cover larger than 5");
  std::vector<int> rest;
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (!std::binary_search(cover.begin(), cover.end(), v)) rest.push_back(v);
  }
  const int extra_max = std::min<int>(static_cast<int>(rest.size()), csize * csize - csize);

  auto handle_d = [&](const std::vector<int>& domain) {
    const int dn = static_cast<int>(domain.size());
    for_each_set_partition(dn, [&](const std::vector<int>& rgs, int nblocks) {
      if (nblocks > csize) return;
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
      for (int i = 0; i < dn; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(domain[static_cast<std::size_t>(i)]);
      for (const auto& b : blocks) {
        bool meets = false;
        for (int v : b) meets = meets || std::binary_search(cover.begin(), cover.end(), v);
        if (!meets) return;
      }
      if (!detail::cover_partition_ok(h, blocks)) return;
      CoverSubPartition rho_c{blocks, domain};
      const auto counts = detail::color_counts(h, rho_c);
      std::vector<unsigned> colors;
      for (const auto& [mask, count] : counts) colors.push_back(mask);
      // Candidate β: nonempty sets of pairwise disjoint present colors.
      std::vector<ColorSet> betas;
      const std::size_t nc = colors.size();
      if (nc > 16) throw CapExceeded("enumerate_classes: too many colors");
      for (std::uint32_t sub = 1; sub < (1U << nc); ++sub) {
        unsigned seen = 0;
        bool disjoint = true;
        ColorSet beta;
        for (std::size_t i = 0; i < nc && disjoint; ++i) {
          if (!((sub >> i) & 1U)) continue;
          disjoint = (seen & colors[i]) == 0;
          seen |= colors[i];
          beta.push_back(colors[i]);
        }
        if (disjoint) betas.push_back(beta);
      }
      std::sort(betas.begin(), betas.end());
      std::map<unsigned, int> remaining = counts;
      // last_use[K] = index of the last β containing K (for pruning)
      std::map<unsigned, std::size_t> last_use;
      for (std::size_t i = 0; i < betas.size(); ++i) {
        for (unsigned k : betas[i]) last_use[k] = i;
      }
      ColorAllocation alloc;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == betas.size()) {
          for (const auto& [k, left] : remaining) {
            if (left != 0) return;
          }
          f(EquivalenceClass{rho_c, alloc});
          return;
        }
        int cap = 1 << 30;
        for (unsigned k : betas[i]) cap = std::min(cap, remaining[k]);
        // Colors whose last chance is β_i must be used up here.
        int need = 0;
        for (unsigned k : betas[i]) {
          if (last_use[k] == i) need = std::max(need, remaining[k]);
        }
        for (int mult = need; mult <= cap; ++mult) {
          if (mult > 0) {
            alloc.multiplicity[betas[i]] = mult;
            for (unsigned k : betas[i]) remaining[k] -= mult;
          }
          rec(i + 1);
          if (mult > 0) {
            for (unsigned k : betas[i]) remaining[k] += mult;
            alloc.multiplicity.erase(betas[i]);
          }
        }
      };
      rec(0);
    });
  };

  for (int extra = 0; extra <= extra_max; ++extra) {
    std::vector<int> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      if (static_cast<int>(pick.size()) == extra) {
        std::vector<int> domain = cover;
        domain.insert(domain.end(), pick.begin(), pick.end());
        std::sort(domain.begin(), domain.end());
        handle_d(domain);
        return;
      }
      for (std::size_t i = start; i < rest.size(); ++i) {
        pick.push_back(rest[i]);
        choose(i + 1);
        pick.pop_back();
      }
    };
    choose(0);
  }
}

inline std::vector<EquivalenceClass> enumerate_classes(const Graph& h, const std::vector<int>& c) {
  std::vector<EquivalenceClass> result;
  for_each_class(h, c, [&](const EquivalenceClass& cls) { result.push_back(cls); });
  return result;
}

/// The class (ρ_C, 𝒦_ρ) of an edge-injective partition ρ for cover c.
inline EquivalenceClass classify_partition(const Graph& h, const std::vector<int>& c, const Partition& rho) {
  std::vector<bool> in_cover(static_cast<std::size_t>(h.num_vertices()), false);
  for (int v : c) in_cover[static_cast<std::size_t>(v)] = true;
  EquivalenceClass cls;
  std::vector<std::vector<int>> others;
  for (const auto& block : rho.blocks()) {
    bool meets = false;
    for (int v : block) meets = meets || in_cover[static_cast<std::size_t>(v)];
    if (meets) {
      cls.rho_c.blocks.push_back(block);
      cls.rho_c.domain.insert(cls.rho_c.domain.end(), block.begin(), block.end());
    } else {
      others.push_back(block);
    }
  }
  std::sort(cls.rho_c.domain.begin(), cls.rho_c.domain.end());
  for (const auto& block : others) {
    ColorSet beta;
    for (int v : block) beta.push_back(color_of(v, cls.rho_c, h));
    std::sort(beta.begin(), beta.end());
    ++cls.alloc.multiplicity[beta];
  }
  return cls;
}

/// N(ρ_C, 𝒦) = Π_K multinomial(k_K; 𝒦(β) for β ∋ K) · Π_β (𝒦(β)!)^{|β|-1};
/// 0 when the allocation does not use every vertex of every color exactly.
inline Count class_size(const EquivalenceClass& cls, const Graph& h) {
  const auto counts = detail::color_counts(h, cls.rho_c);
  std::map<unsigned, std::vector<int>> parts;
  for (const auto& [beta, mult] : cls.alloc.multiplicity) {
    if (mult <= 0) return 0;
    for (unsigned k : beta) parts[k].push_back(mult);
  }
  Count result = 1;
  for (const auto& [k, count] : counts) {
    auto it = parts.find(k);
    int sum = 0;
    if (it != parts.end()) {
      for (int m : it->second) sum += m;
    }
    if (sum != count) return 0;
    Count multinomial = factorial(count);
    if (it != parts.end()) {
      for (int m : it->second) multinomial /= factorial(m);
    }
    result *= multinomial;
  }
  for (const auto& [k, unused] : parts) {
    if (!counts.count(k)) return 0;
  }
  for (const auto& [beta, mult] : cls.alloc.multiplicity) {
    result *= power(factorial(mult), static_cast<unsigned>(beta.size() - 1));
  }
  return result;
}

/// Greedy representative ρ ⊇ ρ_C; nullopt when the class is empty.
inline std::optional<Partition> build_representative(const EquivalenceClass& cls, const Graph& h) {
  std::map<unsigned, std::vector<int>> pool;
  for (int v : detail::outside(h, cls.rho_c)) pool[color_of(v, cls.rho_c, h)].push_back(v);
  std::vector<std::vector<int>> blocks = cls.rho_c.blocks;
  for (const auto& [beta, mult] : cls.alloc.multiplicity) {
    for (int rep = 0; rep < mult; ++rep) {
      std::vector<int> block;
      for (unsigned k : beta) {
        auto& avail = pool[k];
        if (avail.empty()) return std::nullopt;
        block.push_back(avail.back());
        avail.pop_back();
      }
      blocks.push_back(block);
    }
  }
  for (const auto& [k, avail] : pool) {
    if (!avail.empty()) return std::nullopt;
  }
  Partition rho(h.num_vertices(), blocks);
  Quotient q = quotient(h, rho);
  if (q.degenerate || !q.edge_injective) return std::nullopt;
  return rho;
}

// ---------------------------------------------------------------------------
// Embeddings from patterns with a small vertex cover

/// Emb(f, g): enumerate edge-preserving injective images of a minimum cover
/// C' of f, then place the remaining (independent) vertices class by class.
/// Vertices with the same neighborhood K ⊆ C' form a class; host vertices are
/// split into atoms by which classes may use them; a DP over per-atom usage
/// sums Π_K multinomial(m_K; x_{K,·}) · Π_a (|a|)_{used_a}.
inline Count count_emb_small_vc(const Graph& f, const Graph& g, const Caps& caps = default_caps()) {
  const std::vector<int> cover = min_vertex_cover(f, caps);
  if (static_cast<int>(cover.size()) > caps.max_small_cover) {
    throw CapExceeded("count_emb_small_vc: vertex cover of size " + std::to_string(cover.size()) +
                      " exceeds the bound " + std::to_string(caps.max_small_cover));
  }
  const int cn = static_cast<int>(cover.size());
  std::vector<int> cover_index(static_cast<std::size_t>(f.num_vertices()), -1);
  for (int i = 0; i < cn; ++i) cover_index[static_cast<std::size_t>(cover[static_cast<std::size_t>(i)])] = i;
  // Classes of independent vertices by neighborhood mask over the cover.
  std::map<unsigned, int> class_sizes;
  for (int v = 0; v < f.num_vertices(); ++v) {
    if (cover_index[static_cast<std::size_t>(v)] >= 0) continue;
    unsigned mask = 0;
    for (int w : f.neighbors(v)) mask |= 1U << cover_index[static_cast<std::size_t>(w)];
    ++class_sizes[mask];
  }
  std::vector<std::pair<unsigned, int>> classes(class_sizes.begin(), class_sizes.end());
  const int n = g.num_vertices();
  detail::EdgeMatrix adj(g);
  detail::StepBudget budget(caps.max_steps, "small-cover embedding count");

  std::vector<int> image(static_cast<std::size_t>(cn), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  Count total = 0;

  auto place_rest = [&]() -> Count {
    // Atom signature of each free host vertex: bit j set iff class j may use it.
    std::map<unsigned long long, int> atom_size;
    for (int u = 0; u < n; ++u) {
      if (used[static_cast<std::size_t>(u)]) continue;
      unsigned long long sig = 0;
      for (std::size_t j = 0; j < classes.size(); ++j) {
        bool ok = true;
        for (int i = 0; i < cn && ok; ++i) {
          if ((classes[j].first >> i) & 1U) ok = adj(u, image[static_cast<std::size_t>(i)]) >= 0;
        }
        if (ok) sig |= 1ULL << j;
      }
      if (sig) ++atom_size[sig];
    }
    std::vector<std::pair<unsigned long long, int>> atoms(atom_size.begin(), atom_size.end());
    // DP over classes; state = usage per atom.
    std::map<std::vector<int>, Count> states{{std::vector<int>(atoms.size(), 0), Count(1)}};
    for (std::size_t j = 0; j < classes.size(); ++j) {
      const int m = classes[j].second;
      std::vector<std::size_t> eligible;
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        if ((atoms[a].first >> j) & 1ULL) eligible.push_back(a);
      }
      std::map<std::vector<int>, Count> next;
      for (const auto& [usage, weight] : states) {
        std::vector<int> cur = usage;
        // Distribute m labeled vertices over eligible atoms.
        std::function<void(std::size_t, int, Count)> spread = [&](std::size_t idx, int left, Count coef) {
          budget.tick();
          if (idx == eligible.size()) {
            if (left == 0) next[cur] += weight * coef;
            return;
          }
          const std::size_t a = eligible[idx];
          const int room = atoms[a].second - cur[a];
          for (int x = 0; x <= std::min(left, room); ++x) {
            cur[a] += x;
            spread(idx + 1, left - x, coef * binomial(left, x));
            cur[a] -= x;
          }
        };
        spread(0, m, Count(1));
      }
      states = std::move(next);
      if (states.empty()) return 0;
    }
    Count sum = 0;
    for (const auto& [usage, weight] : states) {
      Count ways = weight;
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        for (int i = 0; i < usage[a]; ++i) ways *= atoms[a].second - i;
      }
      sum += ways;
    }
    return sum;
  };

  std::function<void(int)> rec = [&](int i) {
    budget.tick();
    if (i == cn) {
      total += place_rest();
      return;
    }
    const int v = cover[static_cast<std::size_t>(i)];
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (f.has_edge(v, cover[static_cast<std::size_t>(j)])) ok = adj(x, image[static_cast<std::size_t>(j)]) >= 0;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(i)] = x;
      used[static_cast<std::size_t>(x)] = 1;
      rec(i + 1);
      used[static_cast<std::size_t>(x)] = 0;
    }
  };
  rec(0);
  return total;
}

/// EdgInj(h, g) by the collected class sum:
/// multiplier(g) · Σ_classes N(ρ_C, 𝒦) · Emb(core/ρ_rep, g).
inline Count count_edginj_poly(const Graph& h, const Graph& g, const Caps& caps = default_caps()) {
  const ReducedPattern reduced = reduce_isolated(h);
  const Count factor = reduced.multiplier(g);
  if (factor == 0) return 0;
  if (reduced.core.num_vertices() == 0) return factor;
  const std::vector<int> cover = min_vertex_cover(reduced.core, caps);
  if (static_cast<int>(cover.size()) > caps.max_small_cover) {
    throw CapExceeded("count_edginj_poly: weak vertex cover " + std::to_string(cover.size()) +
                      " exceeds the bound " + std::to_string(caps.max_small_cover));
  }
  Count sum = 0;
  for_each_class(reduced.core, cover, [&](const EquivalenceClass& cls) {
    const Count size = class_size(cls, reduced.core);
    if (size == 0) return;
    auto rep = build_representative(cls, reduced.core);
    if (!rep) return;
    sum += size * count_emb_small_vc(quotient(reduced.core, *rep).graph, g, caps);
  });
  return factor * sum;
}

}  // namespace edginj
