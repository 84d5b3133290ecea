// Copyright 2026 The nearviz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nearviz/cli.hpp"
#include "nearviz/gen_io.hpp"
#include "nearviz/ncl.hpp"
#include "nearviz/verify.hpp"

namespace nearviz {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "nearviz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// Drops the two timing columns from a CSV row.
std::string strip_timing(const std::string& row) {
  std::string s = row;
  for (int i = 0; i < 2; ++i) s = s.substr(0, s.rfind(','));
  return s;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nearviz_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
    fs::create_directories(dir_);
    unsetenv("NEARVIZ_SEED");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("NEARVIZ_SEED");
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenColorVerifyPipeline) {
  const auto g = path("g.txt");
  const auto c = path("c.txt");
  const auto s = path("s.csv");
  ASSERT_EQ(run({"gen", "--model", "gnp", "--n", "80", "--p", "0.5", "--seed", "3",
                 "--out", g}).code, 0);
  const auto color = run({"color", g, "--epsilon", "0.5", "--kappa", "30", "--ell",
                          "400", "--force", "--seed", "1", "--retries", "3",
                          "--out", c, "--stats-out", s});
  ASSERT_EQ(color.code, 0) << color.err;
  EXPECT_NE(color.err.find("warning:"), std::string::npos);

  const auto stats = lines(slurp(s));
  ASSERT_EQ(stats.size(), 3u);
  EXPECT_EQ(stats[0].rfind("# graph=", 0), 0u);
  EXPECT_NE(stats[0].find("resolved_kappa=30"), std::string::npos);
  EXPECT_EQ(stats[1], stats_csv_header());

  const auto verify = run({"verify", g, c});
  EXPECT_EQ(verify.code, 0);
  EXPECT_EQ(verify.out.rfind("OK ", 0), 0u);
}

TEST_F(CliTest, VerifyReportsConflictingPair) {
  const auto g = path("g.txt");
  const auto c = path("c.txt");
  std::ofstream(g) << "p 3 2\n0 1\n1 2\n";
  std::ofstream(c) << "0 1 5\n1 2 5\n";
  const auto r = run({"verify", g, c});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("VIOLATION"), std::string::npos);
  EXPECT_NE(r.out.find("(0,1)"), std::string::npos);
  EXPECT_NE(r.out.find("(1,2)"), std::string::npos);
}

TEST_F(CliTest, VerifyPartialColorings) {
  const auto g = path("g.txt");
  const auto c = path("c.txt");
  std::ofstream(g) << "p 3 2\n0 1\n1 2\n";
  std::ofstream(c) << "0 1 2\n1 2 0\n";
  EXPECT_EQ(run({"verify", g, c}).code, 1);
  EXPECT_EQ(run({"verify", g, c, "--allow-partial"}).code, 0);
}

TEST_F(CliTest, InputErrorsExitTwo) {
  const auto g = path("g.txt");
  const auto c = path("c.txt");
  std::ofstream(g) << "0 1\n";
  std::ofstream(c) << "0 1 1\n";
  const auto r = run({"verify", g, c});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  EXPECT_EQ(run({"verify", path("missing.txt"), c}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"color", g, "--epsilon", "1.5"}).code, 2);
}

TEST_F(CliTest, RegimeViolationNeedsForce) {
  const auto g = path("g.txt");
  ASSERT_EQ(run({"gen", "--model", "gnp", "--n", "40", "--p", "0.3", "--out", g}).code, 0);
  const auto r = run({"color", g});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("threshold"), std::string::npos);
}

TEST_F(CliTest, RetriesExhaustedExitsOne) {
  const auto g = path("g.txt");
  const auto s = path("s.csv");
  ASSERT_EQ(run({"gen", "--model", "gnp", "--n", "60", "--p", "0.5", "--seed", "2",
                 "--out", g}).code, 0);
  const auto r = run({"color", g, "--kappa", "20", "--ell", "1", "--force",
                      "--retries", "2", "--stats-out", s});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("attempt 2"), std::string::npos);
  const auto stats = lines(slurp(s));
  ASSERT_EQ(stats.size(), 3u);
  EXPECT_NE(stats[2].find(",0,stage2-degree,"), std::string::npos);
}

TEST_F(CliTest, ColorIsDeterministic) {
  const auto g = path("g.txt");
  ASSERT_EQ(run({"gen", "--model", "regular", "--n", "100", "--d", "20", "--seed", "5",
                 "--out", g}).code, 0);
  std::vector<std::string> colorings, rows;
  for (int i = 0; i < 2; ++i) {
    const auto c = path("c" + std::to_string(i));
    const auto s = path("s" + std::to_string(i));
    ASSERT_EQ(run({"color", g, "--kappa", "30", "--ell", "300", "--force", "--seed",
                   "9", "--retries", "3", "--out", c, "--stats-out", s}).code, 0);
    colorings.push_back(slurp(c));
    rows.push_back(strip_timing(lines(slurp(s)).at(2)));
  }
  EXPECT_EQ(colorings[0], colorings[1]);
  EXPECT_EQ(rows[0], rows[1]);
}

TEST_F(CliTest, SeedFallsBackToEnvironment) {
  setenv("NEARVIZ_SEED", "42", 1);
  const auto a = run({"gen", "--model", "gnp", "--n", "30", "--p", "0.3"});
  const auto b = run({"gen", "--model", "gnp", "--n", "30", "--p", "0.3", "--seed", "42"});
  const auto c = run({"gen", "--model", "gnp", "--n", "30", "--p", "0.3", "--seed", "43"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST_F(CliTest, BenchRowsAndSummary) {
  const auto out = path("bench.csv");
  const auto summary = path("summary.csv");
  std::vector<std::string> args = {"bench", "--model", "gnp", "--sizes", "40,60",
                                   "--p", "0.5", "--trials", "2", "--kappa", "20",
                                   "--ell", "200", "--force", "--seed", "4",
                                   "--out", out, "--summary", summary};
  ASSERT_EQ(run(args).code, 0);
  const auto first = lines(slurp(out));
  ASSERT_EQ(first.size(), 5u);
  EXPECT_EQ(first[0].rfind("model,size,trial,graph_seed,n,m,", 0), 0u);
  EXPECT_EQ(lines(slurp(summary)).size(), 3u);

  ASSERT_EQ(run(args).code, 0);
  const auto second = lines(slurp(out));
  ASSERT_EQ(second.size(), first.size());
  for (std::size_t i = 1; i < first.size(); ++i) {
    EXPECT_EQ(strip_timing(first[i]), strip_timing(second[i]));
  }
}

#ifdef NEARVIZ_TOOL_PATH
TEST_F(CliTest, InstalledBinaryRuns) {
  const auto g = path("g.txt");
  const std::string cmd = std::string(NEARVIZ_TOOL_PATH) +
                          " gen --model gnp --n 10 --p 0.5 --seed 1 --out " + g;
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(read_graph(fs::path(g)).num_vertices(), 10u);
}
#endif

}  // namespace
}  // namespace nearviz
