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

#ifndef REGMAX_EXPERIMENT_H_
#define REGMAX_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "regmax/aoptimal.h"
#include "regmax/coverage.h"
#include "regmax/graph.h"
#include "regmax/run_trace.h"

namespace regmax {

enum class Application { kInfluence, kVertexCover, kAOptimal, kSyntheticCoverage };

const char* ApplicationName(Application app);
// Throws ConfigError for unknown names.
Application ParseApplication(const std::string& name);

// One [algorithm:<label>] section of an experiment file.
struct AlgorithmSpec {
  std::string label;
  // up | gamma-roi | threshold-roi | udg | gamma-guess | pm
  std::string type;
  double epsilon = 0.1;
  // Supplied submodularity ratio; <= 0 means "use the brute-forced
  // empirical ratio of each instance" (written `empirical` in the file).
  double gamma = 1.0;
  int repetitions = 1;  // defaults to 10 for udg
  double decay = 0.2;   // gamma-guess
  std::string runner = "up";  // gamma-guess inner algorithm: up | udg
  double noise_delta = 0.0;   // > 0 wraps the oracle in NoisyOracle
  std::string inner = "up";   // pm inner algorithm
  int max_iterations = 30;    // pm
};

struct ExperimentConfig {
  Application application = Application::kSyntheticCoverage;
  std::uint64_t seed = 1;
  std::string output_dir = "results";
  std::size_t threads = 1;
  bool verify = false;  // annotate rows with brute-force bound checks
  bool traces = false;  // write one JSON trace per run

  // [dataset]: a file path, or synthetic generation when empty.
  std::string dataset;
  std::string weights;  // optional node weights (vertexcover)
  std::vector<std::string> drop_columns;  // aoptimal CSV
  bool normalize = true;                  // aoptimal CSV
  std::size_t instances = 1;  // synthetic instances per sweep point
  std::size_t nodes = 200;    // synthetic graphs
  std::size_t edges = 800;
  std::size_t rr_sets = 0;    // influence evaluation collection, 0 = 10 n
  CoverageSpec coverage;      // synthetic-coverage
  std::size_t design_n = 8;   // synthetic aoptimal
  std::size_t design_d = 3;

  // [cost]
  int q = 1;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double p = 0.5;

  // [sweep]: one of q, lambda1, lambda2, p; a single point when empty.
  std::string sweep_param;
  std::vector<double> sweep_values;

  std::vector<AlgorithmSpec> algorithms;
};

// Parses an INI experiment file. `overrides` are "section.key=value"
// assignments applied on top of the file. Referenced dataset files must
// exist. Throws ConfigError on any schema violation.
ExperimentConfig LoadExperimentConfig(
    const std::string& path, const std::vector<std::string>& overrides = {});
ExperimentConfig ParseExperimentConfig(
    std::istream& in, const std::vector<std::string>& overrides = {});

// One run of one algorithm at one sweep point.
struct ResultRow {
  double sweep_value = 0.0;
  std::size_t instance = 0;
  std::string algorithm;  // label
  std::string type;
  std::string params;     // "key=value;..." in key order
  int repetition = 0;
  std::uint64_t seed = 0;
  double best_value = 0.0;
  std::int64_t oracle_calls = 0;
  std::size_t solution_size = 0;
  std::string bound_ok = "na";  // true | false | na | skip
  double bound_rhs = 0.0;
  double wall_seconds = 0.0;  // written to the timing file only
};

// Median over repetitions for one (sweep point, instance, algorithm).
struct SummaryRow {
  double sweep_value = 0.0;
  std::size_t instance = 0;
  std::string algorithm;
  std::string type;
  int repetitions = 0;
  double median_best_value = 0.0;
  double mean_oracle_calls = 0.0;
  std::string bound_ok = "na";
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  std::vector<SummaryRow> summary;
  std::vector<std::string> warnings;
  // Parallel to rows; filled only when config.traces is set.
  std::vector<RunTrace> traces;
};

// Runs every sweep point x instance x algorithm x repetition. Rows come out
// in that order whatever the thread count.
ExperimentResult RunExperiment(const ExperimentConfig& config);

// Writes rows.csv, summary.csv and timing.csv (plus traces/ when enabled)
// under config.output_dir. Only timing.csv depends on the machine.
void WriteExperiment(const ExperimentConfig& config,
                     const ExperimentResult& result);

std::string RowsCsv(const std::vector<ResultRow>& rows);
std::string SummaryCsv(const std::vector<SummaryRow>& rows);

struct BoundCheck {
  std::size_t instance = 0;
  double sweep_value = 0.0;
  std::string algorithm;
  std::string theorem;  // up | roi | noisy-up | udg-mean
  double gamma = 1.0;
  double f_opt = 0.0;
  double c_opt = 0.0;
  double opt_value = 0.0;
  double best_value = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::string status;  // pass | fail | skip
  std::string reason;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  std::vector<std::string> warnings;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

// Brute-forces OPT for every instance and checks each algorithm against its
// guarantee. A check passes iff slack = best_value - rhs >= 0. Instances
// whose OPT is ∅ are skipped with a reason. UDG is checked in expectation:
// the mean over its repetitions minus three standard errors.
BoundReport VerifyBounds(const ExperimentConfig& config);
std::string BoundReportCsv(const BoundReport& report);

// Shortest round-trip decimal form, so equal doubles print identically.
std::string FormatDouble(double x);

}  // namespace regmax

#endif  // REGMAX_EXPERIMENT_H_
