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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "regmax/errors.h"
#include "regmax/experiment.h"

namespace regmax {
namespace {

namespace fs = std::filesystem;

ExperimentConfig Parse(const std::string& text,
                       const std::vector<std::string>& overrides = {}) {
  std::istringstream in(text);
  return ParseExperimentConfig(in, overrides);
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

class ScratchDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("regmax_exp_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(ExperimentConfigTest, ParsesAllSections) {
  const auto cfg = Parse(R"(
[experiment]
application = vertexcover
seed = 42
output = out
threads = 3
verify = true

[dataset]
nodes = 50
edges = 120
instances = 2

[cost]
q = 4

[sweep]
param = q
values = 1:12

[algorithm:fast]
type = up
epsilon = 0.25

[algorithm:rand]
type = udg
)");
  EXPECT_EQ(cfg.application, Application::kVertexCover);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_EQ(cfg.output_dir, "out");
  EXPECT_EQ(cfg.threads, 3u);
  EXPECT_TRUE(cfg.verify);
  EXPECT_EQ(cfg.nodes, 50u);
  EXPECT_EQ(cfg.instances, 2u);
  EXPECT_EQ(cfg.q, 4);
  ASSERT_EQ(cfg.sweep_values.size(), 12u);
  EXPECT_EQ(cfg.sweep_values.front(), 1.0);
  EXPECT_EQ(cfg.sweep_values.back(), 12.0);
  ASSERT_EQ(cfg.algorithms.size(), 2u);
  EXPECT_EQ(cfg.algorithms[0].label, "fast");
  EXPECT_EQ(cfg.algorithms[0].epsilon, 0.25);
  EXPECT_EQ(cfg.algorithms[1].repetitions, 10);
}

TEST(ExperimentConfigTest, SweepListsAndOverrides) {
  const auto cfg = Parse(
      "[sweep]\nparam = p\nvalues = 0.2, 0.5,1\n[algorithm:a]\ntype = gamma-roi\n",
      {"experiment.seed=9", "algorithm:a.gamma=empirical", "sweep.values=0.1:0.3:0.1"});
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.algorithms[0].gamma, 0.0);
  ASSERT_EQ(cfg.sweep_values.size(), 3u);
  EXPECT_NEAR(cfg.sweep_values[2], 0.3, 1e-12);
}

TEST(ExperimentConfigTest, SchemaViolations) {
  const std::string algo = "[algorithm:a]\ntype = up\n";
  EXPECT_THROW(Parse("[algorithm:x]\ntype = simulated-annealing\n"), ConfigError);
  EXPECT_THROW(Parse("[experiment]\ncolour = red\n" + algo), ConfigError);
  EXPECT_THROW(Parse("[experimnt]\nseed = 1\n" + algo), ConfigError);
  EXPECT_THROW(Parse("[experiment]\nseed = abc\n" + algo), ConfigError);
  EXPECT_THROW(Parse("[experiment]\napplication = chess\n" + algo), ConfigError);
  EXPECT_THROW(Parse("[experiment]\nseed = 1\n"), ConfigError);
  EXPECT_THROW(Parse("[sweep]\nparam = q\nvalues = 5:1\n" + algo), ConfigError);
  EXPECT_THROW(Parse("[sweep]\nparam = sigma\nvalues = 1\n" + algo), ConfigError);
  EXPECT_THROW(Parse("[algorithm:a]\ntype = up\nepsilon = 1.5\n"), ConfigError);
  EXPECT_THROW(Parse("[algorithm:a]\ntype = gamma-roi\nnoise_delta = 0.1\n"), ConfigError);
  EXPECT_THROW(Parse("[algorithm:a]\ntype = pm\n"), ConfigError);
  EXPECT_THROW(Parse("[dataset]\npath = /no/such/file.txt\n" + algo), ConfigError);
  EXPECT_THROW(Parse(algo, {"nodot=1"}), ConfigError);
}

TEST_F(ScratchDir, MalformedIniNamesFileAndLine) {
  const auto path = (dir_ / "broken.ini").string();
  std::ofstream(path) << "[experiment]\nseed = 1\n[algorithm:a\n";
  try {
    LoadExperimentConfig(path);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find(path), std::string::npos) << what;
    EXPECT_NE(what.find("(3)"), std::string::npos) << what;
  }
}

TEST_F(ScratchDir, MalformedDatasetNamesFileAndLine) {
  const auto graph = (dir_ / "g.txt").string();
  std::ofstream(graph) << "0 1\n1 2\n2\n";
  auto cfg = Parse("[experiment]\napplication = vertexcover\n[dataset]\npath = " + graph +
                   "\n[algorithm:a]\ntype = up\n");
  try {
    RunExperiment(cfg);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.file(), graph);
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(RunExperimentTest, VertexCoverSweepShape) {
  auto cfg = Parse(R"(
[experiment]
application = vertexcover
[dataset]
nodes = 60
edges = 200
[sweep]
param = q
values = 1:12
[algorithm:up]
type = up
[algorithm:roi]
type = gamma-roi
[algorithm:udg]
type = udg
repetitions = 5
)");
  const auto result = RunExperiment(cfg);
  EXPECT_EQ(result.rows.size(), 12u * (1 + 1 + 5));
  ASSERT_EQ(result.summary.size(), 12u * 3);
  EXPECT_EQ(result.summary[0].algorithm, "up");
  EXPECT_EQ(result.summary[2].repetitions, 5);
  EXPECT_EQ(result.summary[35].sweep_value, 12.0);
  for (const auto& row : result.rows) {
    EXPECT_GE(row.best_value, 0.0);
    EXPECT_EQ(row.bound_ok, "na");
  }
}

TEST(RunExperimentTest, VerifyAnnotatesRows) {
  auto cfg = Parse(R"(
[experiment]
verify = true
[dataset]
instances = 10
[algorithm:up]
type = up
epsilon = 0.2
[algorithm:roi]
type = gamma-roi
[algorithm:udg]
type = udg
repetitions = 2
)");
  const auto result = RunExperiment(cfg);
  for (const auto& row : result.rows) {
    if (row.type == "udg") {
      EXPECT_EQ(row.bound_ok, "na");
    } else {
      EXPECT_TRUE(row.bound_ok == "true" || row.bound_ok == "skip") << row.bound_ok;
    }
  }
}

TEST(RunExperimentTest, GammaGuessRecordsRounds) {
  auto cfg = Parse(R"(
[experiment]
application = aoptimal
traces = true
[dataset]
instances = 3
[algorithm:guess]
type = gamma-guess
decay = 0.2
)");
  const auto result = RunExperiment(cfg);
  ASSERT_EQ(result.rows.size(), 3u);
  ASSERT_EQ(result.traces.size(), 3u);
  for (const auto& trace : result.traces) {
    EXPECT_EQ(trace.params.at("guess_decay"), 0.2);
    EXPECT_GE(trace.params.at("guess_round"), 0.0);
    EXPECT_LE(trace.params.at("guess_round"), 9.0);
  }
  for (const auto& row : result.rows) EXPECT_NE(row.params.find("guess_round"), std::string::npos);
}

TEST(RunExperimentTest, InfluenceWithPm) {
  auto cfg = Parse(R"(
[experiment]
application = influence
[dataset]
nodes = 40
edges = 120
[algorithm:pm]
type = pm
epsilon = 0.3
[algorithm:up]
type = up
)");
  const auto result = RunExperiment(cfg);
  ASSERT_EQ(result.rows.size(), 2u);
  EXPECT_GE(result.rows[0].best_value, 0.0);
  EXPECT_GT(result.rows[0].oracle_calls, 0);
}

TEST_F(ScratchDir, ByteIdenticalAcrossThreadCounts) {
  const std::string text = R"(
[experiment]
application = vertexcover
seed = 3
traces = true
[dataset]
nodes = 50
edges = 150
instances = 2
[sweep]
param = q
values = 1:4
[algorithm:up]
type = up
[algorithm:thr]
type = threshold-roi
epsilon = 0.3
[algorithm:udg]
type = udg
repetitions = 4
)";
  std::vector<std::string> snapshots;
  for (const char* threads : {"1", "4", "1"}) {
    auto cfg = Parse(text, {std::string("experiment.threads=") + threads,
                            "experiment.output=" + (dir_ / threads).string()});
    WriteExperiment(cfg, RunExperiment(cfg));
    std::string snapshot;
    for (const auto& name : {"rows.csv", "summary.csv", "traces/udg_s2_i1_r3.json"}) {
      snapshot += ReadFile(dir_ / threads / name);
    }
    EXPECT_TRUE(fs::exists(dir_ / threads / "timing.csv"));
    snapshots.push_back(snapshot);
  }
  EXPECT_FALSE(snapshots[0].empty());
  EXPECT_EQ(snapshots[0], snapshots[1]);
  EXPECT_EQ(snapshots[0], snapshots[2]);
}

TEST(VerifyBoundsTest, NoPassWithNegativeSlack) {
  auto cfg = Parse(R"(
[dataset]
instances = 30
[algorithm:up]
type = up
epsilon = 0.5
[algorithm:thr]
type = threshold-roi
epsilon = 0.1
[algorithm:noisy]
type = up
noise_delta = 0.05
[algorithm:udg]
type = udg
repetitions = 50
)");
  const auto report = VerifyBounds(cfg);
  EXPECT_EQ(report.passed + report.failed + report.skipped, report.checks.size());
  EXPECT_EQ(report.failed, 0u);
  for (const auto& check : report.checks) {
    if (check.status == "pass") {
      EXPECT_GE(check.slack, 0.0);
    }
    if (check.status == "skip") {
      EXPECT_FALSE(check.reason.empty());
    }
  }
  EXPECT_NE(BoundReportCsv(report).find("slack"), std::string::npos);
}

TEST(VerifyBoundsTest, EmptyOptimumIsSkipped) {
  // Every element costs more than it can ever cover, so OPT = ∅.
  auto cfg = Parse(R"(
[cost]
lo = 50
hi = 60
[algorithm:up]
type = up
)");
  const auto report = VerifyBounds(cfg);
  ASSERT_EQ(report.checks.size(), 1u);
  EXPECT_EQ(report.checks[0].status, "skip");
  EXPECT_EQ(report.checks[0].opt_value, 0.0);
}

TEST(VerifyBoundsTest, RefusesInstancesAboveCap) {
  auto cfg = Parse("[dataset]\nelements = 21\n[algorithm:up]\ntype = up\n");
  EXPECT_THROW(VerifyBounds(cfg), CapExceededError);
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(12.0), "12");
  EXPECT_EQ(std::stod(FormatDouble(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace regmax
