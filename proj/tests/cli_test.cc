// Copyright 2026 The Authors.
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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "subord/instances.h"

namespace subord::cli {
namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output Invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Line(const std::string& text, const std::string& key) {
  const std::size_t at = text.find(key + ": ");
  if (at == std::string::npos) return "";
  const std::size_t start = at + key.size() + 2;
  return text.substr(start, text.find('\n', start) - start);
}

std::string DropWallTime(const std::string& text) {
  const std::size_t at = text.find("wall_ms: ");
  return at == std::string::npos ? text : text.substr(0, at);
}

std::string Saved(const Instance& inst, const std::string& name) {
  const std::string path = ::testing::TempDir() + "/" + name + ".json";
  SaveInstance(inst, path);
  return path;
}

TEST(CliTest, RunExample1) {
  const std::string path = Saved(GenExample1(5, 0.01), "example1");
  const Output r = Invoke({"run", path, "--algo", "cardinality"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(Line(r.out, "mode"), "direct");
  EXPECT_DOUBLE_EQ(std::stod(Line(r.out, "value")), 5.0);
  EXPECT_DOUBLE_EQ(std::stod(Line(r.out, "ratio")), 1.0);
  EXPECT_NE(r.out.find("setting 0: "), std::string::npos);
}

TEST(CliTest, RunMarkovThroughFramework) {
  const std::string path = Saved(GenMarkov4Item(), "markov4");
  const Output r = Invoke({"run", path, "--algo", "cardinality", "--k", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(Line(r.out, "mode"), "framework");
  EXPECT_GE(std::stod(Line(r.out, "ratio")), 0.45);
}

TEST(CliTest, ZeroNoiseMatchesExactRun) {
  const std::string path = Saved(GenRandomSubmodular(8, 3), "coverage");
  const Output exact = Invoke({"run", path, "--k", "3"});
  const Output noisy = Invoke({"run", path, "--k", "3", "--noisy", "0"});
  ASSERT_EQ(exact.code, kOk) << exact.err;
  ASSERT_EQ(noisy.code, kOk) << noisy.err;
  EXPECT_EQ(DropWallTime(exact.out), DropWallTime(noisy.out));
}

TEST(CliTest, JobsDoNotChangeTheReport) {
  const std::string path = Saved(GenRandomSubmodular(9, 4), "coverage9");
  const Output one = Invoke({"run", path, "--k", "3", "--jobs", "1"});
  const Output four = Invoke({"run", path, "--k", "3", "--jobs", "4"});
  ASSERT_EQ(one.code, kOk) << one.err;
  EXPECT_EQ(DropWallTime(one.out), DropWallTime(four.out));
}

TEST(CliTest, BudgetRun) {
  const std::string path = Saved(GenRandomSubmodular(6, 5), "coverage6");
  const Output r = Invoke({"run", path, "--algo", "budget_third", "--budgets",
                        "1,2,1,3,2,1", "--B", "4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_GE(std::stod(Line(r.out, "ratio")), 0.3);
}

TEST(CliTest, VerifyVerdicts) {
  const std::string markov = Saved(GenMarkov4Item(), "markov4v");
  const Output fail = Invoke({"verify", markov, "--property", "strong-order",
                           "--order", "descending-price"});
  ASSERT_EQ(fail.code, kOk) << fail.err;
  EXPECT_EQ(fail.out.rfind("FAIL strong-order: ", 0), 0u) << fail.out;
  EXPECT_NE(fail.out.find("slack="), std::string::npos);

  const std::string mnl = Saved(GenRandomMnl(8, 2), "mnl8");
  const Output pass = Invoke({"verify", mnl, "--property", "strong-order"});
  ASSERT_EQ(pass.code, kOk) << pass.err;
  EXPECT_EQ(pass.out, "PASS strong-order\n");
}

TEST(CliTest, GenThenRun) {
  const std::string path = ::testing::TempDir() + "/gen_example1.json";
  const Output g = Invoke({"gen", "example1", path, "--k", "4", "--eps-f", "0.05"});
  ASSERT_EQ(g.code, kOk) << g.err;
  const Output r = Invoke({"run", path});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_DOUBLE_EQ(std::stod(Line(r.out, "value")), 4.0);
}

TEST(CliTest, ExitCodes) {
  const std::string bad = ::testing::TempDir() + "/bad.json";
  {
    std::ofstream file(bad);
    file << R"({"kind": "markov", "arrival": [1], "prices": [1],
                "transition": [[1.5]]})";
  }
  const Output parse = Invoke({"run", bad});
  EXPECT_EQ(parse.code, kInstanceError);
  EXPECT_NE(parse.err.find("row 0"), std::string::npos) << parse.err;

  EXPECT_EQ(Invoke({"run"}).code, kUsageError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(Invoke({"run", bad, "--algo", "nope"}).code, kUsageError);

  const std::string big = Saved(GenRandomMnl(14, 1), "mnl14");
  const Output cap = Invoke({"verify", big, "--property", "monotone"});
  EXPECT_EQ(cap.code, kCapExceeded);
  EXPECT_NE(cap.err.find("refused"), std::string::npos);
}

TEST(CliTest, BenchCsvHeader) {
  const Output r = Invoke({"bench", "cardinality", "--seed", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("instance,algo,ratio,bound,queries,query_bound\n", 0),
            0u);
  EXPECT_GT(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

}  // namespace
}  // namespace subord::cli
