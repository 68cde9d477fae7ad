#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "frob/cli/app.hpp"

namespace {

struct CliRun {
  int exit;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "frob");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int e = frob::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {e, out.str(), err.str()};
}

nlohmann::json last_line(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return nlohmann::json::parse(last);
}

}  // namespace

TEST(Cli, DecompositionPasses) {
  CliRun r = run({"verify-decomposition", "--n", "2", "--trials", "20", "--mode", "exact", "--seed", "7"});
  EXPECT_EQ(r.exit, 0);
  auto s = last_line(r.out);
  EXPECT_EQ(s["verdict"], "pass");
  EXPECT_EQ(s["trials"], 20);
  EXPECT_EQ(s["tolerance"], "exact zero");
  EXPECT_FALSE(s.contains("wall_time"));
}

TEST(Cli, SameSeedSameBytes) {
  for (auto args : std::vector<std::vector<std::string>>{{"verify-g2", "--family", "e6", "--trials", "2"},
                                                         {"verify-residues", "--family", "an", "--n", "4"},
                                                         {"compute-odiff", "--family", "apq", "--p", "2", "--q", "3"}}) {
    CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    setenv(frob::kWorkersEnv, "3", 1);
    CliRun c = run(args);
    unsetenv(frob::kWorkersEnv);
    EXPECT_EQ(a.out, c.out);
  }
}

TEST(Cli, SeedChangesPoints) {
  CliRun a = run({"verify-g2", "--family", "an", "--n", "2", "--seed", "1"});
  CliRun b = run({"verify-g2", "--family", "an", "--n", "2", "--seed", "2"});
  EXPECT_NE(a.out, b.out);
}

TEST(Cli, NumericReportPrintsTolerance) {
  CliRun r = run({"verify-g2", "--family", "an", "--n", "2", "--mode", "numeric"});
  EXPECT_EQ(r.exit, 0);
  auto s = last_line(r.out);
  EXPECT_EQ(s["precision"], 256);
  EXPECT_EQ(s["tolerance"], "2^-128 relative to largest term");
}

TEST(Cli, ComputeOdiff) {
  CliRun r = run({"compute-odiff", "--family", "apq", "--p", "2", "--q", "2"});
  EXPECT_EQ(r.exit, 0);
  EXPECT_EQ(last_line(r.out)["extra"]["closed_form"], "2");
}

TEST(Cli, EnumerateGraphs) {
  CliRun r = run({"enumerate-graphs", "--emit", "json"});
  EXPECT_EQ(r.exit, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 16);
  CliRun d = run({"enumerate-graphs", "--emit", "dot"});
  EXPECT_NE(d.out.find("Q16"), std::string::npos);
}

TEST(Cli, FailureExitCodes) {
  EXPECT_EQ(run({"verify-decomposition", "--n", "2", "--trials", "2", "--coeff", "1=1/7"}).exit, 1);
  EXPECT_EQ(run({"verify-g2", "--family", "2d", "--mu", "1/4"}).exit, 1);
  EXPECT_EQ(run({"verify-g2", "--family", "2d", "--mu", "1/4", "--expect", "nonzero"}).exit, 0);
}

TEST(Cli, UsageExitCodes) {
  EXPECT_EQ(run({}).exit, 2);
  EXPECT_EQ(run({"verify-g2", "--bogus"}).exit, 2);
  EXPECT_EQ(run({"verify-g2", "--family", "zz"}).exit, 2);
  EXPECT_EQ(run({"verify-g2", "--precision", "8"}).exit, 2);
  EXPECT_EQ(run({"verify-g2", "--family", "e6", "--precision", "128"}).exit, 2);
  EXPECT_EQ(run({"verify-g2", "--family", "e6", "--mode", "exact"}).exit, 2);
  EXPECT_EQ(run({"verify-decomposition", "--coeff", "99=1"}).exit, 2);
  EXPECT_EQ(run({"dump-expr", "--expr", "nope"}).exit, 2);
  EXPECT_EQ(run({"verify-residues", "--family", "apq"}).exit, 2);
}

TEST(Cli, HelpListsDefaults) {
  CliRun r = run({"--help-all"});
  EXPECT_EQ(r.exit, 0);
  EXPECT_NE(r.out.find("[256]"), std::string::npos);
  EXPECT_NE(r.out.find(frob::kWorkersEnv), std::string::npos);
  EXPECT_NE(r.out.find("[20240601]"), std::string::npos);
}

TEST(Cli, OutputFile) {
  std::string path = testing::TempDir() + "frob_report.jsonl";
  CliRun r = run({"verify-relation", "--family", "free", "--n", "2", "--output", path});
  EXPECT_EQ(r.exit, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(last_line(ss.str())["verdict"], "pass");
}

TEST(Cli, DumpExpr) {
  CliRun r = run({"dump-expr", "--n", "2", "--expr", "Q3"});
  EXPECT_EQ(r.exit, 0);
  EXPECT_EQ(r.out.rfind("(dag", 0), 0u);
}
