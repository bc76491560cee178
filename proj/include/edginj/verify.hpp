#pragma once

// Identity-verification suites. Each suite checks one family of counting
// identities against the brute-force oracles and reports pass/fail per
// instance. Used by `edginj verify` and by the acceptance runner.

#include "edginj/common.hpp"
#include "edginj/eihom.hpp"
#include "edginj/graph.hpp"
#include "edginj/holant.hpp"
#include "edginj/line_matchings.hpp"
#include "edginj/numeric.hpp"
#include "edginj/oracles.hpp"
#include "edginj/reductions.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace edginj::verify {

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseResult> cases;
  double seconds = 0;

  int failures() const {
    int n = 0;
    for (const auto& c : cases) n += c.pass ? 0 : 1;
    return n;
  }
  bool pass() const { return !cases.empty() && failures() == 0; }
};

struct Options {
  int random_pairs = 200;          // criteria 1 and 2
  int random_instances = 100;      // other randomized suites
  std::uint64_t seed = 0x5eed2024ULL;
  std::vector<std::pair<std::string, Graph>> corpus;  // extra hosts (name, graph)
};

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// helpers

namespace detail {

/// Runs `body`; a returned string is a failure detail, nullopt a pass.
/// Exceptions fail the case with their message.
inline void run_case(SuiteResult& suite, const std::string& id, const std::function<std::optional<std::string>()>& body) {
  CaseResult r{id, false, ""};
  try {
    auto failure = body();
    r.pass = !failure.has_value();
    if (failure) r.detail = *failure;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  suite.cases.push_back(std::move(r));
}

inline std::optional<std::string> expect_eq(const Count& got, const Count& want, const std::string& what) {
  if (got == want) return std::nullopt;
  return what + ": got " + got.str() + ", expected " + want.str();
}

inline std::optional<std::string> expect(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline double random_density(Rng& rng) { return std::uniform_real_distribution<double>(0.2, 0.75)(rng); }

/// Colored graph with k declared colors and at most max_edges edges.
inline Graph random_colored_graph(Rng& rng, int n, int k, int max_edges) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const int m = uniform(rng, 1, std::min<int>(max_edges, static_cast<int>(pairs.size())));
  Graph g(n);
  for (int i = 0; i < m; ++i) g.add_colored_edge(pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second, uniform(rng, 1, k));
  g.set_num_colors(k);
  return g;
}

/// Bipartite graph meeting the wedge-reduction conditions: right vertices of
/// degree 1 or 2, no two right vertices with the same neighbor pair.
inline Graph random_valid_bipartite(Rng& rng, int left, int right) {
  Graph g(left + right);
  std::set<std::pair<int, int>> used;
  for (int r = 0; r < right; ++r) {
    const int v = left + r;
    const int a = uniform(rng, 0, left - 1);
    g.add_edge(a, v);
    if (left > 1 && uniform(rng, 0, 2) > 0) {
      int b = uniform(rng, 0, left - 2);
      if (b >= a) ++b;
      if (used.insert({std::min(a, b), std::max(a, b)}).second) g.add_edge(b, v);
    }
  }
  return g;
}

inline std::vector<bool> left_mask(int left, int total) {
  std::vector<bool> mask(static_cast<std::size_t>(total), false);
  for (int v = 0; v < left; ++v) mask[static_cast<std::size_t>(v)] = true;
  return mask;
}

inline std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.num_vertices() << " E={";
  for (const Edge& e : g.edges()) out << e.u << "-" << e.v << " ";
  out << "}";
  return out.str();
}

inline Graph cubic_graph(const std::string& name) {
  auto from_edges = [](int n, std::vector<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  };
  if (name == "K4") return make_pattern(PatternKind::clique, {4});
  if (name == "K33") return make_pattern(PatternKind::biclique, {3, 3});
  if (name == "prism") return from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  if (name == "cube") {
    return from_edges(8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7}, {7, 6}, {6, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  }
  if (name == "wagner") {
    return from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  }
  if (name == "petersen") {
    return from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  }
  throw DomainError("unknown cubic graph " + name);
}

inline const std::vector<std::string>& cubic_names() {
  static const std::vector<std::string> names{"K4", "K33", "prism", "cube", "wagner", "petersen"};
  return names;
}

inline Count edge_injective_partitions(const Graph& h) {
  Count n = 0;
  for_each_set_partition(h.num_vertices(), [&](const std::vector<int>& rgs, int) {
    Quotient q = quotient(h, Partition::from_rgs(rgs));
    if (!q.degenerate && q.edge_injective) ++n;
  });
  return n;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Criterion 1: Emb <= EdgInj <= Hom and the partition sum

inline SuiteResult suite_sandwich(const Options& opt) {
  SuiteResult s{"sandwich", {}, 0};
  Rng rng(opt.seed ^ 0x01);
  auto check = [&](const Graph& h, const Graph& g, const std::string& id) {
    detail::run_case(s, id, [&]() -> std::optional<std::string> {
      const Count hom = count_hom(h, g), emb = count_emb(h, g), inj = count_edginj(h, g);
      if (!(emb <= inj && inj <= hom)) {
        return "order violated: emb=" + emb.str() + " edginj=" + inj.str() + " hom=" + hom.str() + " h " +
               detail::describe(h) + " g " + detail::describe(g);
      }
      return detail::expect_eq(count_edginj_via_partition_sum(h, g), inj, "partition sum");
    });
  };
  for (int i = 0; i < opt.random_pairs; ++i) {
    Graph h = detail::random_graph(rng, detail::uniform(rng, 1, 5), detail::random_density(rng));
    Graph g = detail::random_graph(rng, detail::uniform(rng, 1, 6), detail::random_density(rng));
    check(h, g, "pair-" + std::to_string(i));
  }
  for (const auto& [name, host] : opt.corpus) {
    Graph h = detail::random_graph(rng, detail::uniform(rng, 1, 5), detail::random_density(rng));
    check(h, underlying_graph(host), "corpus-" + name);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 2: polynomial-time algorithm against the oracle

inline SuiteResult suite_eihom_poly(const Options& opt) {
  SuiteResult s{"eihom-poly", {}, 0};
  Rng rng(opt.seed ^ 0x02);
  const Caps caps = Caps::for_pipelines();
  auto check = [&](const Graph& h, const Graph& g, const std::string& id) {
    detail::run_case(s, id, [&]() -> std::optional<std::string> {
      auto r = detail::expect_eq(count_edginj_poly(h, g, caps), count_edginj(h, g, caps), "poly vs oracle");
      if (r) *r += " h " + detail::describe(h) + " g " + detail::describe(g);
      return r;
    });
  };
  auto random_pattern = [&]() {
    for (;;) {
      Graph h = detail::random_graph(rng, detail::uniform(rng, 1, 6), detail::random_density(rng));
      if (vertex_cover_number(h, CoverMode::weak) <= 3) return h;
    }
  };
  // fixed instances
  check(make_pattern(PatternKind::path, {2}), make_pattern(PatternKind::clique, {3}), "P2-in-K3");
  check(make_pattern(PatternKind::path, {1}), make_pattern(PatternKind::cycle, {5}), "K2-in-C5");
  check(make_pattern(PatternKind::matching, {2}), make_pattern(PatternKind::clique, {4}), "2K2-in-K4");
  for (int k = 1; k <= 3; ++k) {
    check(make_pattern(PatternKind::wedges, {k}), make_pattern(PatternKind::clique, {4}), std::to_string(k) + "P2-in-K4");
  }
  check(make_pattern(PatternKind::star, {3}), make_pattern(PatternKind::clique, {5}), "K13-in-K5");
  for (int i = 0; i < opt.random_pairs; ++i) {
    Graph h = random_pattern();
    Graph g = detail::random_graph(rng, detail::uniform(rng, 1, 7), detail::random_density(rng));
    check(h, g, "pair-" + std::to_string(i));
  }
  for (const auto& [name, host] : opt.corpus) check(random_pattern(), underlying_graph(host), "corpus-" + name);
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 3: class bookkeeping

inline SuiteResult suite_classes(const Options& opt) {
  SuiteResult s{"classes", {}, 0};
  Rng rng(opt.seed ^ 0x03);
  auto check = [&](const Graph& pattern, const std::string& id) {
    detail::run_case(s, id, [&]() -> std::optional<std::string> {
      const Graph h = reduce_isolated(pattern).core;
      if (h.num_vertices() == 0) return std::nullopt;
      const auto cover = min_vertex_cover(h);
      const auto classes = enumerate_classes(h, cover);
      Count total = 0;
      std::map<EquivalenceClass, Count> sizes;
      for (const auto& cls : classes) {
        if (cls.rho_c.blocks.size() > cover.size() || cls.rho_c.domain.size() > cover.size() * cover.size()) {
          return std::string("candidate exceeds the |C| / |C|^2 bounds");
        }
        const Count n = class_size(cls, h);
        total += n;
        sizes[cls] = n;
      }
      if (auto r = detail::expect_eq(total, detail::edge_injective_partitions(h), "sum of class sizes")) {
        return *r + " h " + detail::describe(h);
      }
      // every edge-injective partition lands in an enumerated class whose
      // representative has an isomorphic quotient
      std::map<EquivalenceClass, Count> seen;
      std::map<EquivalenceClass, Graph> rep_quotient;
      std::optional<std::string> failure;
      for_each_set_partition(h.num_vertices(), [&](const std::vector<int>& rgs, int) {
        if (failure) return;
        const Partition rho = Partition::from_rgs(rgs);
        const Quotient q = quotient(h, rho);
        if (q.degenerate || !q.edge_injective) return;
        const EquivalenceClass cls = classify_partition(h, cover, rho);
        ++seen[cls];
        auto it = rep_quotient.find(cls);
        if (it == rep_quotient.end()) {
          auto rep = build_representative(cls, h);
          if (!rep) {
            failure = "no representative for an occupied class";
            return;
          }
          it = rep_quotient.emplace(cls, quotient(h, *rep).graph).first;
        }
        if (!is_isomorphic(q.graph, it->second)) failure = "quotient not isomorphic to the representative's";
      });
      if (failure) return *failure + " h " + detail::describe(h);
      for (const auto& [cls, count] : seen) {
        auto it = sizes.find(cls);
        if (it == sizes.end()) return std::string("occupied class missing from the enumeration");
        if (it->second != count) return "class size " + it->second.str() + " but " + count.str() + " partitions";
      }
      return std::nullopt;
    });
  };
  check(make_pattern(PatternKind::path, {2}), "P2");
  check(make_pattern(PatternKind::subdivided_star, {2}), "SS2");
  check(make_pattern(PatternKind::wedges, {2}), "2P2");
  check(make_pattern(PatternKind::star, {4}), "K14");
  for (int i = 0; i < opt.random_instances; ++i) {
    Graph h = detail::random_graph(rng, detail::uniform(rng, 2, 6), detail::random_density(rng));
    check(h, "random-" + std::to_string(i));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 4: Holant identities

inline SuiteResult suite_match_holant(const Options& opt) {
  SuiteResult s{"match-holant", {}, 0};
  Rng rng(opt.seed ^ 0x04);
  auto check = [&](const Graph& g, const std::string& id) {
    detail::run_case(s, id, [&]() -> std::optional<std::string> {
      const Count want = count_matchings(g, g.num_colors(), true);
      const Rational a = col_holant(build_match_holant(g));
      const Rational b = col_holant(build_omega_bip(g));
      if (a != Rational(want)) return "ColHolant(Omega) = " + a.str() + ", oracle " + want.str();
      if (b != Rational(want)) return "ColHolant(Omega_bip) = " + b.str() + ", oracle " + want.str();
      if (!(strip_signatures(build_match_holant(g)) == g)) return std::string("strip_signatures does not invert");
      return std::nullopt;
    });
  };
  Graph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_colored_edge(i, (i + 1) % 4, 1 + i % 2);
  check(c4, "C4-1212");
  for (int i = 0; i < opt.random_instances; ++i) {
    const int k = detail::uniform(rng, 1, 3);
    check(detail::random_colored_graph(rng, detail::uniform(rng, 2, 6), k, 8), "random-" + std::to_string(i));
  }
  for (const auto& [name, host] : opt.corpus) {
    if (host.is_colored() && host.num_edges() <= 12) check(host, "corpus-" + name);
  }
  return s;
}

inline SuiteResult suite_combined_sig(const Options& opt) {
  SuiteResult s{"combined-sig", {}, 0};
  Rng rng(opt.seed ^ 0x05);
  for (int i = 0; i < opt.random_instances; ++i) {
    detail::run_case(s, "random-" + std::to_string(i), [&]() -> std::optional<std::string> {
      // random signature graph with table signatures, parallel edges allowed
      SignatureGraph omega;
      const int n = detail::uniform(rng, 2, 5);
      const int k = detail::uniform(rng, 1, 3);
      for (int v = 0; v < n; ++v) omega.add_vertex();
      const int m = detail::uniform(rng, k, k + 4);
      for (int e = 0; e < m; ++e) {
        int a = detail::uniform(rng, 0, n - 1), b = detail::uniform(rng, 0, n - 2);
        if (b >= a) ++b;
        omega.add_edge(a, b, e < k ? e + 1 : detail::uniform(rng, 1, k));
      }
      auto random_table = [&](int arity) {
        std::vector<Rational> values(std::size_t(1) << arity);
        for (auto& x : values) x = detail::uniform(rng, -2, 3);
        return values;
      };
      for (int v = 0; v < n; ++v) omega.set_signature(v, Signature::table(random_table(static_cast<int>(omega.incident(v).size()))));
      // s <= 2 marked vertices, t <= 3 parts each
      std::vector<CombinedTerm> terms;
      const int marked = detail::uniform(rng, 0, std::min(2, n));
      for (int j = 0; j < marked; ++j) {
        const int v = j;
        const int arity = static_cast<int>(omega.incident(v).size());
        const int t = detail::uniform(rng, 1, 3);
        CombinedTerm term{v, {}};
        auto remainder = signature_table(omega, v);
        for (int p = 0; p + 1 < t; ++p) {
          const Rational c(detail::uniform(rng, -3, 3), detail::uniform(rng, 1, 3));
          auto values = random_table(arity);
          for (std::size_t x = 0; x < values.size(); ++x) remainder[x] -= c * values[x];
          term.parts.emplace_back(c, Signature::table(values));
        }
        term.parts.emplace_back(Rational(1), Signature::table(remainder));
        terms.push_back(std::move(term));
      }
      Rational sum = 0;
      for (const auto& [coef, graph] : expand_combined(omega, terms)) sum += coef * col_holant(graph);
      const Rational want = col_holant(omega);
      if (sum != want) return "expanded sum " + sum.str() + " vs " + want.str();
      return std::nullopt;
    });
  }
  // insertion of a matchgate realizing HW<=1 leaves the Holant unchanged
  detail::run_case(s, "insert-hw1-gate", [&]() -> std::optional<std::string> {
    Graph g(4);
    g.add_colored_edge(0, 1, 1);
    g.add_colored_edge(1, 2, 2);
    g.add_colored_edge(2, 3, 1);
    g.add_colored_edge(3, 0, 2);
    g.add_colored_edge(0, 2, 3);
    const SignatureGraph omega = build_match_holant(g);
    SignatureGraph gate;  // one HW<=1 vertex carrying all of vertex 0's edges
    gate.add_vertex();
    std::vector<int> order = omega.incident(0);
    for (int e : order) gate.add_dangling(0, omega.edge(e).color);
    const Rational before = col_holant(omega);
    const Rational after = col_holant(insert_matchgate(omega, 0, gate, order));
    if (before != after) return "insertion changed ColHolant " + before.str() + " -> " + after.str();
    return std::nullopt;
  });
  return s;
}

inline SuiteResult suite_gamma(const Options&) {
  SuiteResult s{"gamma", {}, 0};
  for (int m = 1; m <= 5; ++m) {
    detail::run_case(s, "m=" + std::to_string(m), [&]() -> std::optional<std::string> {
      std::vector<std::pair<int, int>> ports;
      for (int a = 0; a < m; ++a) {
        ports.emplace_back(bip_color(1, 1), 10 + a);
        ports.emplace_back(bip_color(1, 2), 10 + a);
      }
      const SignatureGraph g1 = build_gamma(1, 1, ports);
      const SignatureGraph g2 = build_gamma(2, 1, ports);
      const int d = static_cast<int>(ports.size());
      const Rational c1 = gamma_coefficient(1, m), c2 = gamma_coefficient(2, m);
      for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
        std::vector<bool> x(static_cast<std::size_t>(d));
        std::vector<std::optional<int>> ann;
        for (int i = 0; i < d; ++i) {
          x[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
          ann.push_back(ports[static_cast<std::size_t>(i)].second);
        }
        const Rational s1 = col_sig(g1, x), s2 = col_sig(g2, x);
        const Rational f = Signature::annotation_eq().evaluate(mask, d, ann);
        if (c1 * s1 + c2 * s2 != f) return "decomposition fails at mask " + std::to_string(mask);
        // colorful boundary: exactly one (1,1) port and one (1,2) port
        int first = -1, second = -1, hits = 0;
        for (int i = 0; i < d; ++i) {
          if (!x[static_cast<std::size_t>(i)]) continue;
          ++hits;
          (ports[static_cast<std::size_t>(i)].first == bip_color(1, 1) ? first : second) = i;
        }
        if (hits == 2 && first >= 0 && second >= 0) {
          if (s1 != 1) return std::string("ColSig(Gamma_1) != 1 on a colorful boundary");
          const bool same = ports[static_cast<std::size_t>(first)].second == ports[static_cast<std::size_t>(second)].second;
          const int want = same ? m * m - 3 * m + 2 : m * m - 3 * m + 3;
          if (s2 != want) return "ColSig(Gamma_2) = " + s2.str() + ", expected " + std::to_string(want);
        }
      }
      return std::nullopt;
    });
  }
  return s;
}

inline SuiteResult suite_subdiv(const Options& opt) {
  SuiteResult s{"subdiv", {}, 0};
  Rng rng(opt.seed ^ 0x06);
  auto check = [&](const Graph& g, const std::string& id) {
    detail::run_case(s, id, [&]() -> std::optional<std::string> {
      const int k = g.num_colors();
      const Count want = count_matchings(g, k, true);
      std::vector<SubdivisionQuery> queries;
      if (auto r = detail::expect_eq(colmatch_via_subdivision(g, k, &queries), want, "via subdivision")) return r;
      if (auto r = detail::expect_eq(colmatch_via_uncolored(g), want, "via uncolored")) return r;
      const int bound = 4 * (g.num_vertices() + g.num_edges());
      for (const auto& q : queries) {
        if (q.graph.num_vertices() > bound || q.graph.num_edges() > bound || q.graph.num_colors() > 4 * k) {
          return std::string("query graph exceeds the 4(n+m) / 4k bounds");
        }
      }
      return std::nullopt;
    });
  };
  Graph single(2);
  single.add_colored_edge(0, 1, 1);
  check(single, "single-edge");
  for (int i = 0; i < opt.random_instances; ++i) {
    const int k = detail::uniform(rng, 1, 3);
    check(detail::random_colored_graph(rng, detail::uniform(rng, 2, 6), k, 8), "random-" + std::to_string(i));
  }
  for (const auto& [name, host] : opt.corpus) {
    if (host.is_colored() && host.num_edges() <= 10 && host.num_colors() <= 4) check(host, "corpus-" + name);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 5: moment recovery

inline SuiteResult suite_interp(const Options& opt) {
  SuiteResult s{"interp", {}, 0};
  Rng rng(opt.seed ^ 0x07);
  for (int i = 0; i < opt.random_instances; ++i) {
    const int k = i % 5;
    detail::run_case(s, "planted-" + std::to_string(i) + "-k" + std::to_string(k), [&]() -> std::optional<std::string> {
      const int top = recovery_inputs_needed(k);
      std::map<std::pair<int, int>, Rational> a;
      for (int row = 0; row <= top; ++row) {
        for (int t = 0; t <= row; ++t) a[{t, row - t}] = detail::uniform(rng, 0, 50);
      }
      std::vector<Polynomial> p;
      for (int r = 0; r <= top; ++r) p.push_back(moment_polynomial(a, r));
      const auto got = recover_unknowns(k, p);
      for (int t = 0; t <= k; ++t) {
        if (got[static_cast<std::size_t>(t)] != a[{t, k - t}]) {
          return "a_{" + std::to_string(t) + "," + std::to_string(k - t) + "} recovered as " + got[static_cast<std::size_t>(t)].str();
        }
      }
      return std::nullopt;
    });
  }
  for (int k = 0; k <= 3; ++k) {
    for (int d = 0; d <= 4; ++d) {
      detail::run_case(s, "sigma-k" + std::to_string(k) + "-d" + std::to_string(d), [&]() -> std::optional<std::string> {
        const auto sig = sigma_expand(k + d, k);
        if (static_cast<int>(sig.size()) != 2 * d + 1) return std::string("wrong number of sigma polynomials");
        for (int j = 0; j <= 2 * d; ++j) {
          const Polynomial& q = sig[static_cast<std::size_t>(j)];
          if (q.degree() != j) return "sigma_" + std::to_string(j) + " has degree " + std::to_string(q.degree());
          const Rational lead = Rational(binomial(2 * d, j)) * (j % 2 == 0 ? 1 : -1);
          if (q.coeff(j) != lead) return "leading coefficient of sigma_" + std::to_string(j);
        }
        // (y - t)_{2d} = Σ σ_j(t) y^{2d-j} at sample points
        for (int t = -2; t <= 3; ++t) {
          for (int y = -1; y <= 6; ++y) {
            Rational rhs = 0;
            for (int j = 0; j <= 2 * d; ++j) {
              Rational yp = 1;
              for (int e = 0; e < 2 * d - j; ++e) yp *= y;
              rhs += sig[static_cast<std::size_t>(j)](Rational(t)) * yp;
            }
            if (falling_factorial(Rational(y - t), 2 * d) != rhs) return std::string("expansion mismatch");
          }
        }
        return std::nullopt;
      });
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 6: wedge packings

inline SuiteResult suite_wedge(const Options& opt) {
  SuiteResult s{"wedge", {}, 0};
  Rng rng(opt.seed ^ 0x08);
  const Caps caps = Caps::for_pipelines();
  auto check = [&](const Graph& g, const std::vector<bool>& left, const std::string& id, bool double_enumeration) {
    for (int k = 0; k <= 3; ++k) {
      detail::run_case(s, id + "-k" + std::to_string(k), [&]() -> std::optional<std::string> {
        const Count want = count_matchings(g, k, false);
        const auto rep = count_matchings_via_wedges_report(g, left, k, caps);
        if (auto r = detail::expect_eq(rep.value, want, "wedge pipeline")) return *r + " g " + detail::describe(g);
        if (!double_enumeration) return std::nullopt;
        const auto stats = wedge_stats(g, left, k, 3, caps);
        const Count a = stats.alpha.count({k, 0}) ? stats.alpha.at({k, 0}) : Count(0);
        if (auto r = detail::expect_eq(a, want * power(2, static_cast<unsigned>(k)) * factorial(k), "alpha_{k,0}")) return r;
        if (auto r = detail::expect_eq(rep.alpha_k0, a, "recovered alpha_{k,0}")) return r;
        int n = 0;
        for (bool l : left) n += l ? 1 : 0;
        for (const auto& [r, beta] : stats.beta) {
          if (auto e = detail::expect_eq(beta_from_alpha(stats.alpha, k, n, r), beta, "beta identity at r=" + std::to_string(r))) return e;
        }
        return std::nullopt;
      });
    }
  };
  {
    // C_6 with alternate vertices on the right
    Graph c6 = make_pattern(PatternKind::cycle, {6});
    std::vector<bool> left{true, false, true, false, true, false};
    check(c6, left, "C6", true);
  }
  for (int i = 0; i < opt.random_instances / 5; ++i) {
    const int l = detail::uniform(rng, 2, 4), r = detail::uniform(rng, 1, 4);
    Graph g = detail::random_valid_bipartite(rng, l, r);
    check(g, detail::left_mask(l, l + r), "random-" + std::to_string(i), i < 8);
  }
  for (const auto& [name, host] : opt.corpus) {
    std::vector<bool> left;
    try {
      left = infer_left_side(host);
    } catch (const DomainError&) {
      continue;
    }
    check(underlying_graph(host), left, "corpus-" + name, false);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 7: line graphs

inline SuiteResult suite_odd_gf2(const Options& opt) {
  SuiteResult s{"odd-gf2", {}, 0};
  Rng rng(opt.seed ^ 0x09);
  auto check = [&](const Graph& g, const std::string& id) {
    detail::run_case(s, id, [&]() -> std::optional<std::string> {
      return detail::expect_eq(count_odd_edge_sets(g), count_odd_edge_sets_enum(g), "gf2 vs enumeration");
    });
  };
  detail::run_case(s, "K4", [&]() { return detail::expect_eq(count_odd_edge_sets(make_pattern(PatternKind::clique, {4})), 8, "K4"); });
  detail::run_case(s, "K2", [&]() { return detail::expect_eq(count_odd_edge_sets(make_pattern(PatternKind::path, {1})), 1, "K2"); });
  detail::run_case(s, "isolated", [&]() { return detail::expect_eq(count_odd_edge_sets(Graph(3)), 0, "isolated vertex"); });
  for (int i = 0; i < opt.random_instances; ++i) {
    Graph g;
    do {
      g = detail::random_graph(rng, detail::uniform(rng, 2, 8), detail::random_density(rng));
    } while (g.num_edges() > 20);
    check(g, "random-" + std::to_string(i));
  }
  for (const auto& [name, host] : opt.corpus) {
    if (host.num_edges() <= 20) check(underlying_graph(host), "corpus-" + name);
  }
  return s;
}

inline SuiteResult suite_collar(const Options&) {
  SuiteResult s{"collar", {}, 0};
  for (int l = 1; l <= 4; ++l) {
    detail::run_case(s, "collar-" + std::to_string(l), [&]() -> std::optional<std::string> {
      const Graph x = make_pattern(PatternKind::collar, {l});
      const int u = x.anchor("u"), v = x.anchor("v");
      if (auto r = detail::expect_eq(count_perfect_matchings(x), 1, "whole collar")) return r;
      if (auto r = detail::expect_eq(count_perfect_matchings(remove_vertices(x, {u})), 0, "collar minus u")) return r;
      if (auto r = detail::expect_eq(count_perfect_matchings(remove_vertices(x, {v})), 0, "collar minus v")) return r;
      return detail::expect_eq(count_perfect_matchings(remove_vertices(x, {u, v})), power(3, static_cast<unsigned>(l)), "collar minus both ends");
    });
  }
  for (int l = 1; l <= 3; ++l) {
    detail::run_case(s, "barbed-line-" + std::to_string(l), [&]() {
      return detail::expect(is_isomorphic(line_graph(make_pattern(PatternKind::barbed_wire, {l})), make_pattern(PatternKind::collar, {l})),
                            "line graph of the barbed wire is not the collar");
    });
  }
  return s;
}

inline SuiteResult suite_line(const Options& opt) {
  SuiteResult s{"line", {}, 0};
  Rng rng(opt.seed ^ 0x0a);
  for (const auto& name : detail::cubic_names()) {
    const Graph g = detail::cubic_graph(name);
    detail::run_case(s, "subdivided-line-" + name, [&]() -> std::optional<std::string> {
      const Graph l = line_graph(subdivide(g, 1));
      if (l.num_vertices() > 30) return std::string("instance above 30 vertices");
      return detail::expect_eq(count_perfmatch_3regular_line(l), count_perfect_matchings(l), "odd edge-sets vs oracle");
    });
    if (g.num_vertices() > 8) continue;
    detail::run_case(s, "expansion-" + name, [&]() -> std::optional<std::string> {
      const Graph gp = triangle_expand(g);
      const LineDecomposition d = decompose_3regular_line(gp);
      std::vector<std::pair<int, int>> want;
      for (const Edge& e : g.edges()) want.emplace_back(e.u, e.v);
      auto got = d.down_edges;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      if (got != want) return std::string("contracted expansion differs from the input");
      std::vector<int> matching(static_cast<std::size_t>(g.num_edges()));
      for (int e = 0; e < g.num_edges(); ++e) matching[static_cast<std::size_t>(e)] = e;
      const auto by_t = count_perfect_matchings_by_marked(gp, matching);
      const auto odd = count_odd_edge_sets_by_size(g);
      for (std::size_t t = 0; t < odd.size(); ++t) {
        if (by_t[t] != odd[t]) return "per-cardinality mismatch at t=" + std::to_string(t);
      }
      return detail::expect_eq(by_t[static_cast<std::size_t>(g.num_vertices() / 2)], count_perfect_matchings(g), "m_{|V|/2}");
    });
  }
  detail::run_case(s, "subdivided-K4-value", [&]() {
    return detail::expect_eq(count_perfmatch_3regular_line(line_graph(subdivide(make_pattern(PatternKind::clique, {4}), 1))), 8, "L(S(K4))");
  });
  for (const std::string name : {"K4", "K33"}) {
    detail::run_case(s, "pipeline-" + name, [&]() -> std::optional<std::string> {
      const Graph g = detail::cubic_graph(name);
      const auto rep = perfmatch_via_line_reduction_report(g, 0);
      if (rep.b_max_degree > 4) return std::string("collar graph has degree above 4");
      if (auto r = detail::expect_eq(rep.total, [&] {
            Count sum = 0;
            for (std::size_t t = 0; t < rep.digits.size(); ++t) {
              sum += rep.digits[t] * power(rep.base, static_cast<unsigned>(rep.digits.size() - 1 - t));
            }
            return sum;
          }(), "digit expansion")) {
        return r;
      }
      return detail::expect_eq(rep.value, count_perfect_matchings(g), "pipeline value");
    });
  }
  detail::run_case(s, "pipeline-overflow", [&]() -> std::optional<std::string> {
    try {
      perfmatch_via_line_reduction(detail::cubic_graph("K33"), 1);
    } catch (const IdentityViolation&) {
      return std::nullopt;
    }
    return std::string("overflowing digits were not reported");
  });
  detail::run_case(s, "digits-23-9", [&]() -> std::optional<std::string> {
    auto d = extract_digits_base_R(23, 9, 1);
    return detail::expect(d.size() == 2 && d[0] == 2 && d[1] == 5, "23 in base 9");
  });
  for (int i = 0; i < 20; ++i) {
    detail::run_case(s, "digits-roundtrip-" + std::to_string(i), [&]() -> std::optional<std::string> {
      const Count r = detail::uniform(rng, 2, 1000);
      const int d = detail::uniform(rng, 0, 6);
      std::vector<Count> planted;
      Count total = 0;
      for (int t = 0; t <= d; ++t) {
        planted.push_back(Count(detail::uniform(rng, 0, 1 << 20)) % r);
        total = total * r + planted.back();
      }
      return detail::expect(extract_digits_base_R(total, r, d) == planted, "digits differ after round trip");
    });
  }
  detail::run_case(s, "decompose-rejects", [&]() -> std::optional<std::string> {
    for (const Graph& g : {make_pattern(PatternKind::clique, {4}), make_pattern(PatternKind::cycle, {6}), detail::cubic_graph("K33")}) {
      try {
        decompose_3regular_line(g);
        return "accepted " + detail::describe(g);
      } catch (const DomainError&) {
      }
    }
    return std::nullopt;
  });
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 8: the remaining reductions

inline SuiteResult suite_apex(const Options& opt) {
  SuiteResult s{"apex", {}, 0};
  Rng rng(opt.seed ^ 0x0b);
  detail::run_case(s, "C4-k2", [&]() -> std::optional<std::string> {
    const Graph c4 = make_pattern(PatternKind::cycle, {4});
    if (auto r = detail::expect_eq(count_edginj(make_pattern(PatternKind::triangles, {2}), add_apex(c4), Caps::for_pipelines()), 144, "EdgInj(2K3, C4+apex)")) return r;
    return detail::expect_eq(count_matchings_via_apex(c4, 2), 2, "m_2(C4)");
  });
  for (int i = 0; i < opt.random_instances / 5; ++i) {
    const int l = detail::uniform(rng, 2, 4), r = detail::uniform(rng, 1, 4);
    const Graph g = detail::random_valid_bipartite(rng, l, r);
    for (int k = 1; k <= 3; ++k) {
      detail::run_case(s, "random-" + std::to_string(i) + "-k" + std::to_string(k), [&]() {
        return detail::expect_eq(count_matchings_via_apex(g, k), count_matchings(g, k, false), "apex pipeline");
      });
    }
  }
  detail::run_case(s, "rejects-odd-cycle", [&]() -> std::optional<std::string> {
    try {
      count_matchings_via_apex(make_pattern(PatternKind::cycle, {5}), 1);
    } catch (const DomainError&) {
      return std::nullopt;
    }
    return std::string("non-bipartite input accepted");
  });
  return s;
}

inline SuiteResult suite_star(const Options& opt) {
  SuiteResult s{"star", {}, 0};
  Rng rng(opt.seed ^ 0x0c);
  const Graph c6 = make_pattern(PatternKind::cycle, {6});
  const std::vector<bool> c6_left{true, false, true, false, true, false};
  for (int k = 0; k <= 3; ++k) {
    detail::run_case(s, "C6-k" + std::to_string(k), [&]() {
      return detail::expect_eq(count_matchings_via_star(c6, c6_left, k), count_matchings(c6, k, false), "star pipeline");
    });
  }
  detail::run_case(s, "single-edge-k1", [&]() {
    return detail::expect_eq(count_matchings_via_star(make_pattern(PatternKind::path, {1}), 1), 1, "one edge");
  });
  for (int i = 0; i < opt.random_instances / 5; ++i) {
    const int l = detail::uniform(rng, 2, 4), r = detail::uniform(rng, 1, 4);
    const Graph g = detail::random_valid_bipartite(rng, l, r);
    const auto left = detail::left_mask(l, l + r);
    for (int k = 1; k <= 3; ++k) {
      detail::run_case(s, "random-" + std::to_string(i) + "-k" + std::to_string(k), [&]() -> std::optional<std::string> {
        const Graph host = build_star_host(g, left);
        for (const Edge& e : host.edges()) {
          if (e.u == e.v) return std::string("loop in G'");
        }
        return detail::expect_eq(count_matchings_via_star(g, left, k), count_matchings(g, k, false), "star pipeline");
      });
    }
  }
  return s;
}

inline SuiteResult suite_cycle_gadget(const Options& opt) {
  SuiteResult s{"cycle-gadget", {}, 0};
  Rng rng(opt.seed ^ 0x0d);
  auto check = [&](const Graph& g, int k, const std::string& id) {
    detail::run_case(s, id, [&]() -> std::optional<std::string> {
      CycleGadgetLayout lay;
      const Graph gb = build_cycle_gadget(g, 1, &lay);
      int want_vertices = 0;
      for (int v = 0; v < g.num_vertices(); ++v) want_vertices += 2 * g.degree(v) + 4;
      if (gb.num_vertices() != want_vertices) return std::string("gadget vertex count");
      const int sep = min_weighted_edge_separation(gb, lay);
      if (sep >= 0 && sep < 5) return "weighted edges only " + std::to_string(sep) + " apart";
      return detail::expect_eq(count_simple_cycles_via_gadget(g, k), count_simple_cycles(g, k, Caps::for_pipelines()), "gadget pipeline");
    });
  };
  check(make_pattern(PatternKind::clique, {4}), 3, "K4-k3");
  check(make_pattern(PatternKind::cycle, {5}), 3, "C5-k3");
  for (int i = 0; i < std::max(1, opt.random_instances / 10); ++i) {
    check(detail::random_graph(rng, detail::uniform(rng, 3, 6), 0.5), 3, "random-" + std::to_string(i));
  }
  detail::run_case(s, "weighted-cycle-identity", [&]() -> std::optional<std::string> {
    // 2k · Σ_{c} Π w(e) by cycle enumeration vs the weighted map count
    for (int k = 3; k <= 4; ++k) {
      Graph g(5);
      int w = 1;
      for (int u = 0; u < 5; ++u) {
        for (int v = u + 1; v < 5; ++v) {
          if ((u + v) % 3 != 0) g.add_weighted_edge(u, v, 1 + (w++ % 3));
        }
      }
      Count by_cycles = 0;
      std::set<std::vector<int>> seen;
      for_each_map(make_pattern(PatternKind::cycle, {k}), g, MapKind::edginj, [&](const std::vector<int>&, const std::vector<int>& image) {
        std::vector<int> key = image;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        Count p = 1;
        for (int e : image) p *= g.weight(e);
        by_cycles += p;
      });
      // each edge set of an edge-disjoint cycle of length <= 4 is one cycle
      if (count_edginj_weighted(make_pattern(PatternKind::cycle, {k}), g) != Count(2 * k) * by_cycles) {
        return "weighted identity fails for k=" + std::to_string(k);
      }
    }
    return std::nullopt;
  });
  return s;
}

inline SuiteResult suite_unweight(const Options& opt) {
  SuiteResult s{"unweight", {}, 0};
  Rng rng(opt.seed ^ 0x0e);
  for (int j = 1; j <= 3; ++j) {
    detail::run_case(s, "gadget-walks-" + std::to_string(j), [&]() -> std::optional<std::string> {
      const Graph gj = make_pattern(PatternKind::gadget_g, {j});
      const auto trails = trails_between(gj, gj.anchor("a"), gj.anchor("b"));
      if (static_cast<int>(trails.size()) != j) return "found " + std::to_string(trails.size()) + " trails";
      std::map<int, int> through;
      for (const auto& t : trails) {
        if (static_cast<int>(t.size()) != 2 * j - 1) return std::string("trail of wrong length");
        for (int i = 1; i <= j; ++i) {
          if (std::find(t.begin(), t.end(), gj.edge_mark("e" + std::to_string(i))) != t.end()) ++through[i];
        }
      }
      for (int i = 1; i <= j; ++i) {
        if (through[i] != 1) return "e" + std::to_string(i) + " is on " + std::to_string(through[i]) + " trails";
      }
      const int longest = longest_closed_trail(gj);
      const int want = j == 1 ? 0 : 4 * j - 2;
      if (longest != want) return "longest closed trail " + std::to_string(longest) + ", expected " + std::to_string(want);
      return std::nullopt;
    });
  }
  auto check = [&](const Graph& g, int k, const std::string& id) {
    detail::run_case(s, id, [&]() -> std::optional<std::string> {
      const auto rep = unweight_cycles(g, k, true);
      if (!rep.holds()) return "lhs " + rep.lhs->str() + " vs rhs " + rep.rhs->str();
      return std::nullopt;
    });
  };
  {
    Graph g(4);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}) g.add_weighted_edge(a, b, 1);
    check(g, 4, "diamond-W1-k4");
  }
  for (int i = 0; i < std::max(1, opt.random_instances / 10); ++i) {
    Graph base = detail::random_graph(rng, detail::uniform(rng, 4, 5), 0.6);
    const int wmax = i % 2 == 0 ? 1 : 2;
    Graph g(base.num_vertices());
    for (const Edge& e : base.edges()) g.add_weighted_edge(e.u, e.v, detail::uniform(rng, 1, wmax));
    if (g.num_edges() == 0) continue;
    check(g, 4, "random-" + std::to_string(i) + "-W" + std::to_string(wmax));
  }
  return s;
}

inline SuiteResult suite_ec_paths(const Options& opt) {
  SuiteResult s{"ec-paths", {}, 0};
  Rng rng(opt.seed ^ 0x0f);
  auto check = [&](const Graph& g, int k, const std::string& id) {
    detail::run_case(s, id, [&]() {
      return detail::expect_eq(ec_cycles_via_paths(g, k), count_edge_disjoint(g, k, WalkKind::cycle, Caps::for_pipelines()), "paths vs cycle oracle");
    });
  };
  detail::run_case(s, "K4-k3", [&]() { return detail::expect_eq(ec_cycles_via_paths(make_pattern(PatternKind::clique, {4}), 3), 4, "K4"); });
  detail::run_case(s, "C5-k5", [&]() { return detail::expect_eq(ec_cycles_via_paths(make_pattern(PatternKind::cycle, {5}), 5), 1, "C5"); });
  detail::run_case(s, "C6-k3", [&]() { return detail::expect_eq(ec_cycles_via_paths(make_pattern(PatternKind::cycle, {6}), 3), 0, "triangle-free"); });
  for (int i = 0; i < std::max(1, opt.random_instances / 4); ++i) {
    Graph g = detail::random_graph(rng, detail::uniform(rng, 3, 6), detail::random_density(rng));
    check(g, 3 + i % 3, "random-" + std::to_string(i) + "-k" + std::to_string(3 + i % 3));
  }
  for (const auto& [name, host] : opt.corpus) {
    if (host.num_vertices() <= 8) check(underlying_graph(host), 3, "corpus-" + name);
  }
  return s;
}

// ---------------------------------------------------------------------------
// registry

inline const std::vector<std::pair<std::string, std::function<SuiteResult(const Options&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<SuiteResult(const Options&)>>> suites{
      {"sandwich", suite_sandwich},         {"eihom-poly", suite_eihom_poly}, {"classes", suite_classes},
      {"match-holant", suite_match_holant}, {"combined-sig", suite_combined_sig}, {"gamma", suite_gamma},
      {"subdiv", suite_subdiv},             {"interp", suite_interp},         {"wedge", suite_wedge},
      {"odd-gf2", suite_odd_gf2},           {"collar", suite_collar},         {"line", suite_line},
      {"apex", suite_apex},                 {"star", suite_star},             {"cycle-gadget", suite_cycle_gadget},
      {"unweight", suite_unweight},         {"ec-paths", suite_ec_paths},
  };
  return suites;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

/// Suites backing acceptance criterion c (1..8).
inline std::vector<std::string> suites_for_criterion(int c) {
  switch (c) {
    case 1: return {"sandwich"};
    case 2: return {"eihom-poly"};
    case 3: return {"classes"};
    case 4: return {"match-holant", "combined-sig", "gamma", "subdiv"};
    case 5: return {"interp"};
    case 6: return {"wedge"};
    case 7: return {"odd-gf2", "collar", "line"};
    case 8: return {"apex", "star", "cycle-gadget", "unweight", "ec-paths"};
    default: return {};
  }
}

inline SuiteResult run_suite(const std::string& name, const Options& opt) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) {
      const auto start = std::chrono::steady_clock::now();
      SuiteResult r = fn(opt);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  }
  throw DomainError("unknown verification suite '" + name + "'");
}

}  // namespace edginj::verify
