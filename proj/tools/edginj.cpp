// edginj: count, gen, fmt and verify front end.
//
// exit codes: 0 ok, 1 verification failure, 2 usage/parse/domain error,
// 3 cap exceeded.

#include "edginj/eihom.hpp"
#include "edginj/graph.hpp"
#include "edginj/holant.hpp"
#include "edginj/line_matchings.hpp"
#include "edginj/oracles.hpp"
#include "edginj/reductions.hpp"
#include "edginj/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace edginj;
using json = nlohmann::json;

constexpr int kOk = 0, kVerifyFail = 1, kUsage = 2, kCap = 3;

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// builtin:<kind>,<p1>,<p2>... or a graph file
Graph load_graph(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) != 0) return parse_graph(read_text(spec));
  std::stringstream in(spec.substr(prefix.size()));
  std::string kind, tok;
  std::getline(in, kind, ',');
  std::vector<int> params;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad builtin parameter '" + tok + "'");
    }
  }
  return make_pattern(kind, params);
}

struct CountArgs {
  std::string quantity;
  std::string pattern;
  std::string host;
  int k = -1;
  int ell = 0;
  std::string algo = "oracle";
  std::string format = "text";
};

[[noreturn]] void bad_algo(const CountArgs& a) {
  throw DomainError("algorithm '" + a.algo + "' is not available for " + a.quantity);
}

int need_k(const CountArgs& a) {
  if (a.k < 0) throw DomainError(a.quantity + " needs --k");
  return a.k;
}

Count run_count(const CountArgs& a) {
  const Caps caps = default_caps();
  const Graph g = load_graph(a.host);
  const std::string& q = a.quantity;
  const std::string& algo = a.algo;

  if (q == "hom" || q == "emb" || q == "edginj") {
    if (a.pattern.empty()) throw DomainError(q + " needs --pattern");
    const Graph h = underlying_graph(load_graph(a.pattern));
    const Graph host = underlying_graph(g);
    if (algo == "oracle") {
      if (q == "hom") return count_hom(h, host, caps);
      if (q == "emb") return count_emb(h, host, caps);
      return count_edginj(h, host, caps);
    }
    if (q == "edginj" && algo == "poly") return count_edginj_poly(h, host, caps);
    if (q == "edginj" && algo == "partition") return count_edginj_via_partition_sum(h, host, caps);
    bad_algo(a);
  }
  if (q == "wedginj") {
    const Graph host = underlying_graph(g);
    const int k = need_k(a);
    const Graph h = make_pattern(PatternKind::wedges, {k});
    if (algo == "oracle") return count_edginj(h, host, Caps::for_pipelines());
    if (algo == "poly") return count_edginj_poly(h, host, caps);
    if (algo == "pipeline:wedge-sets") return count_edginj_wedges(k, host, caps);
    bad_algo(a);
  }
  if (q == "matchings") {
    const Graph host = underlying_graph(g);
    const int k = need_k(a);
    if (algo == "oracle") return count_matchings(host, k, false, caps);
    if (algo == "pipeline:wedges") return count_matchings_via_wedges(host, k);
    if (algo == "pipeline:apex") return count_matchings_via_apex(host, k);
    if (algo == "pipeline:star") return count_matchings_via_star(host, k);
    bad_algo(a);
  }
  if (q == "colmatch") {
    if (!g.is_colored()) throw DomainError("colmatch needs an edge-colored host (c= attributes)");
    const int k = a.k < 0 ? g.num_colors() : a.k;
    if (k != g.num_colors()) throw DomainError("--k must equal the number of colors of the host");
    if (algo == "oracle") return count_matchings(g, k, true, caps);
    if (algo == "pipeline:holant") {
      const Rational v = col_holant(build_match_holant(g), caps);
      if (denominator(v) != 1) throw IdentityViolation("ColHolant is not an integer");
      return numerator(v);
    }
    if (algo == "pipeline:subdivision") return colmatch_via_subdivision(g, k, nullptr, caps);
    if (algo == "pipeline:uncolored") return colmatch_via_uncolored(g, caps);
    bad_algo(a);
  }
  if (q == "perfmatch") {
    const Graph host = underlying_graph(g);
    if (algo == "oracle") return count_perfect_matchings(host, caps);
    if (algo == "poly") return count_perfmatch_3regular_line(host, caps);
    if (algo == "pipeline:line") return perfmatch_via_line_reduction(host, a.ell, caps);
    bad_algo(a);
  }
  if (q == "odd-edge-sets") {
    const Graph host = underlying_graph(g);
    if (algo == "oracle") return count_odd_edge_sets_enum(host, caps);
    if (algo == "poly") return count_odd_edge_sets(host);
    bad_algo(a);
  }
  if (q == "ec-cycles") {
    const int k = need_k(a);
    if (g.is_weighted()) {
      if (algo == "oracle") return weighted_edge_disjoint_cycles(g, k);
      if (algo == "pipeline:unweight") {
        const auto rep = unweight_cycles(g, k, false);
        const Count lhs = count_edginj(make_pattern(PatternKind::cycle, {rep.cycle_length}), rep.graph, Caps::for_pipelines());
        return exact_div(lhs, Count(2 * std::max(rep.max_weight, 1) + 1) * (2 * k), "EdgInj(C, G') / (2W+1)2k");
      }
      bad_algo(a);
    }
    if (algo == "oracle") return count_edge_disjoint(g, k, WalkKind::cycle, Caps::for_pipelines());
    if (algo == "pipeline:paths") return ec_cycles_via_paths(g, k);
    bad_algo(a);
  }
  if (q == "ec-paths") {
    if (algo == "oracle") return count_edge_disjoint(underlying_graph(g), need_k(a), WalkKind::path, Caps::for_pipelines());
    bad_algo(a);
  }
  if (q == "cycles") {
    const Graph host = underlying_graph(g);
    if (algo == "oracle") return count_simple_cycles(host, need_k(a), Caps::for_pipelines());
    if (algo == "pipeline:gadget") return count_simple_cycles_via_gadget(host, need_k(a));
    bad_algo(a);
  }
  throw DomainError("unknown quantity '" + q + "'");
}

int cmd_count(const CountArgs& a) {
  const Count value = run_count(a);
  if (a.format == "json") {
    json params = json::object();
    if (!a.pattern.empty()) params["pattern"] = a.pattern;
    params["host"] = a.host;
    if (a.k >= 0) params["k"] = a.k;
    if (a.ell > 0) params["ell"] = a.ell;
    json out{{"quantity", a.quantity}, {"value", value.str()}, {"algo", a.algo}, {"params", params}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
  return kOk;
}

int cmd_gen(const std::string& kind, const std::vector<int>& params) {
  std::cout << serialize_graph(make_pattern(kind, params));
  return kOk;
}

int cmd_fmt(const std::string& path) {
  std::cout << serialize_graph(parse_graph(read_text(path)));
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  std::string corpus;
  int pairs = 200;
  int instances = 100;
  std::uint64_t seed = verify::Options{}.seed;
  bool failures_only = false;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a) {
  verify::Options opt;
  opt.random_pairs = a.pairs;
  opt.random_instances = a.instances;
  opt.seed = a.seed;
  if (!a.corpus.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(a.corpus)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) opt.corpus.emplace_back(f.filename().string(), parse_graph(read_text(f.string())));
  }
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = verify::suite_names();
  } else {
    names.push_back(a.suite);
  }
  bool ok = true;
  json report = json::array();
  for (const auto& name : names) {
    const verify::SuiteResult r = verify::run_suite(name, opt);
    ok = ok && r.pass();
    if (a.format == "json") {
      json cases = json::array();
      for (const auto& c : r.cases) {
        if (a.failures_only && c.pass) continue;
        cases.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
      }
      report.push_back({{"suite", name}, {"pass", r.pass()}, {"instances", r.cases.size()}, {"failures", r.failures()},
                        {"seconds", r.seconds}, {"cases", cases}});
      continue;
    }
    for (const auto& c : r.cases) {
      if (a.failures_only && c.pass) continue;
      std::cout << (c.pass ? "PASS " : "FAIL ") << name << " " << c.id;
      if (!c.pass) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
    std::cout << name << ": " << (r.cases.size() - static_cast<std::size_t>(r.failures())) << "/" << r.cases.size()
              << " passed in " << r.seconds << " s" << (r.pass() ? "" : "  <-- FAILED") << "\n";
  }
  if (a.format == "json") std::cout << report.dump(2) << "\n";
  return ok ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of edge-injective homomorphisms and related reductions"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count a quantity on a host graph");
  c->add_option("quantity", count.quantity,
                "hom|emb|edginj|wedginj|matchings|colmatch|perfmatch|odd-edge-sets|ec-cycles|ec-paths|cycles")
      ->required();
  c->add_option("--pattern", count.pattern, "pattern file or builtin:<kind>,<params>");
  c->add_option("--host", count.host, "host graph file ('-' for stdin) or builtin:<kind>,<params>")->required();
  c->add_option("--k", count.k, "size parameter");
  c->add_option("--algo", count.algo, "oracle|poly|partition|pipeline:<name>");
  c->add_option("--ell", count.ell, "collar length for pipeline:line (0 = smallest safe)");
  c->add_option("--format", count.format)->check(CLI::IsMember({"text", "json"}));

  std::string gen_kind;
  std::vector<int> gen_params;
  auto* g = app.add_subcommand("gen", "Emit a builtin pattern in the graph format");
  g->add_option("kind", gen_kind)->required();
  g->add_option("params", gen_params);

  std::string fmt_path;
  auto* f = app.add_subcommand("fmt", "Parse a graph file and print it canonically");
  f->add_option("file", fmt_path)->required();

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run an identity-verification suite ('all' for every suite)");
  std::vector<std::string> choices = verify::suite_names();
  choices.push_back("all");
  v->add_option("suite", ver.suite)->required()->check(CLI::IsMember(choices));
  v->add_option("--corpus", ver.corpus, "directory of extra host graphs")->check(CLI::ExistingDirectory);
  v->add_option("--pairs", ver.pairs, "random pairs for sandwich and eihom-poly");
  v->add_option("--instances", ver.instances, "random instances for the other suites");
  v->add_option("--seed", ver.seed);
  v->add_flag("--failures-only", ver.failures_only, "print only failing instances");
  v->add_option("--format", ver.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (c->parsed()) return cmd_count(count);
    if (g->parsed()) return cmd_gen(gen_kind, gen_params);
    if (f->parsed()) return cmd_fmt(fmt_path);
    return cmd_verify(ver);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return kVerifyFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
