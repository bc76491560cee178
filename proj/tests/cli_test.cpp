#include "edginj/graph.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace edginj;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EDGINJ_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("edginj_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, CountEdgInj) {
  const std::string k3 = write_temp("k3.g", "v 3\ne 0 1\ne 1 2\ne 0 2\n");
  for (const char* algo : {"oracle", "poly", "partition"}) {
    auto r = run("count edginj --pattern builtin:P,2 --host " + k3 + " --algo " + algo);
    EXPECT_EQ(r.code, 0) << algo;
    EXPECT_EQ(r.out, "6\n") << algo;
  }
}

TEST(Cli, JsonOutput) {
  auto r = run("count matchings --host builtin:C,6 --k 2 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"value\":\"9\""), std::string::npos);
  EXPECT_NE(r.out.find("\"quantity\":\"matchings\""), std::string::npos);
  EXPECT_NE(r.out.find("\"algo\":\"oracle\""), std::string::npos);
  EXPECT_NE(r.out.find("\"params\""), std::string::npos);
}

TEST(Cli, Pipelines) {
  EXPECT_EQ(run("count matchings --host builtin:C,6 --k 2 --algo pipeline:wedges").out, "9\n");
  EXPECT_EQ(run("count matchings --host builtin:C,4 --k 2 --algo pipeline:apex").out, "2\n");
  EXPECT_EQ(run("count matchings --host builtin:C,6 --k 3 --algo pipeline:star").out, "2\n");
  EXPECT_EQ(run("count perfmatch --host builtin:K,4 --algo pipeline:line").out, "3\n");
  EXPECT_EQ(run("count cycles --host builtin:K,4 --k 3 --algo pipeline:gadget").out, "4\n");
  EXPECT_EQ(run("count ec-cycles --host builtin:C,5 --k 5 --algo pipeline:paths").out, "1\n");
  EXPECT_EQ(run("count odd-edge-sets --host builtin:K,4 --algo poly").out, "8\n");
  EXPECT_EQ(run("count wedginj --host builtin:K,4 --k 2 --algo poly").out, "240\n");
  const std::string c4 = write_temp("c4.g", "v 4\ne 0 1 c=1\ne 1 2 c=1\ne 2 3 c=2\ne 0 3 c=2\n");
  for (const char* algo : {"oracle", "pipeline:holant", "pipeline:subdivision", "pipeline:uncolored"}) {
    EXPECT_EQ(run(std::string("count colmatch --host ") + c4 + " --algo " + algo).out, "2\n") << algo;
  }
  const std::string w = write_temp("w.g", "v 4\ne 0 1 w=1\ne 1 2 w=1\ne 2 3 w=1\ne 0 3 w=1\ne 0 2 w=1\n");
  EXPECT_EQ(run("count ec-cycles --host " + w + " --k 4").out, run("count ec-cycles --host " + w + " --k 4 --algo pipeline:unweight").out);
}

TEST(Cli, GenRoundTrip) {
  auto r = run("gen collar 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("v 10\n", 0), 0U);
  EXPECT_EQ(r.out, serialize_graph(make_pattern("collar", {2})));
  const std::string path = write_temp("collar2.g", r.out);
  EXPECT_EQ(run("fmt " + path).out, r.out);
  EXPECT_EQ(run("count perfmatch --host " + path).out, "1\n");
}

TEST(Cli, FmtCanonicalizes) {
  const std::string path = write_temp("messy.g", "# messy\nv 3\ne 2 1\n\ne 1 0\n");
  EXPECT_EQ(run("fmt " + path).out, "v 3\ne 0 1\ne 1 2\n");
}

TEST(Cli, Verify) {
  auto r = run("verify collar");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS collar collar-4"), std::string::npos);
  EXPECT_NE(r.out.find("collar: 7/7 passed"), std::string::npos);
  EXPECT_EQ(run("verify gamma --format json").code, 0);
}

TEST(Cli, VerifyCorpus) {
  const auto dir = std::filesystem::temp_directory_path() / "edginj_cli_corpus";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "c6.g") << serialize_graph(make_pattern("C", {6}));
  std::ofstream(dir / "k4.g") << serialize_graph(make_pattern("K", {4}));
  auto r = run("verify ec-paths --instances 4 --corpus " + dir.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("corpus-k4.g"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("count").code, 2);
  EXPECT_EQ(run("count edginj --host /nonexistent/file").code, 2);
  EXPECT_EQ(run("count nope --host builtin:K,3").code, 2);
  EXPECT_EQ(run("count edginj --pattern builtin:P,x --host builtin:K,3").code, 2);
  EXPECT_EQ(run("count matchings --host builtin:K,3 --algo pipeline:none --k 1").code, 2);
  EXPECT_EQ(run("verify nonsense").code, 2);
  EXPECT_EQ(run("count hom --pattern builtin:K,9 --host builtin:K,9").code, 3);
  EXPECT_EQ(run("count perfmatch --host builtin:K,4 --algo pipeline:line --ell 1").code, 1);
  const std::string bad = write_temp("bad.g", "v 2\ne 0 1\ne 0 1\n");
  EXPECT_EQ(run("count edginj --pattern builtin:P,1 --host " + bad).code, 2);
}

TEST(Cli, CapOverrideFromEnvironment) {
  auto r = run("count hom --pattern builtin:K,9 --host builtin:K,9");
  EXPECT_EQ(r.code, 3);
  const std::string cmd = std::string("EDGINJ_MAX_PATTERN_VERTICES=9 ") + EDGINJ_CLI + " count hom --pattern builtin:K,9 --host builtin:K,9";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  char buf[64] = {};
  EXPECT_GT(std::fread(buf, 1, sizeof buf - 1, pipe), 0U);
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 0);
  EXPECT_EQ(std::string(buf), "362880\n");
}
