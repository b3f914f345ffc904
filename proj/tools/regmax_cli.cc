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

// Command-line front end: experiment sweeps, bound verification, synthetic
// instance generation and trace inspection.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "regmax/aoptimal.h"
#include "regmax/coverage.h"
#include "regmax/errors.h"
#include "regmax/experiment.h"
#include "regmax/graph.h"
#include "regmax/run_trace.h"

namespace {

struct ConfigFlags {
  std::string config;
  std::vector<std::string> overrides;
  std::int64_t seed = -1;
  std::string output;
  std::int64_t threads = -1;
};

void AddConfigFlags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("-c,--config", flags.config, "Experiment file (INI)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", flags.overrides,
                  "Override a config key, e.g. --set cost.q=4 (repeatable)");
  cmd->add_option("--seed", flags.seed, "Overrides experiment.seed");
  cmd->add_option("-o,--output", flags.output, "Overrides experiment.output");
  cmd->add_option("-j,--threads", flags.threads, "Overrides experiment.threads");
}

regmax::ExperimentConfig LoadConfig(const ConfigFlags& flags) {
  std::vector<std::string> overrides = flags.overrides;
  if (flags.seed >= 0) overrides.push_back("experiment.seed=" + std::to_string(flags.seed));
  if (!flags.output.empty()) overrides.push_back("experiment.output=" + flags.output);
  if (flags.threads >= 0) {
    overrides.push_back("experiment.threads=" + std::to_string(flags.threads));
  }
  return regmax::LoadExperimentConfig(flags.config, overrides);
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int RunCommand(const ConfigFlags& flags) {
  const regmax::ExperimentConfig config = LoadConfig(flags);
  const regmax::ExperimentResult result = regmax::RunExperiment(config);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  regmax::WriteExperiment(config, result);
  std::cout << regmax::SummaryCsv(result.summary);
  std::cerr << "wrote " << result.rows.size() << " rows to " << config.output_dir << "\n";
  return 0;
}

int VerifyCommand(const ConfigFlags& flags, const std::string& report_path) {
  const regmax::ExperimentConfig config = LoadConfig(flags);
  const regmax::BoundReport report = regmax::VerifyBounds(config);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  WriteText(report_path, regmax::BoundReportCsv(report));
  std::cerr << "pass " << report.passed << "  fail " << report.failed << "  skip "
            << report.skipped << "\n";
  return report.failed == 0 ? 0 : 1;
}

int InspectCommand(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::cout << regmax::FormatTrace(regmax::TraceFromJson(buffer.str()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularized weakly-submodular maximization toolkit"};
  app.require_subcommand(1);

  ConfigFlags run_flags;
  auto* run = app.add_subcommand("run", "Run an experiment sweep and write CSV results");
  AddConfigFlags(run, run_flags);

  ConfigFlags verify_flags;
  std::string report_path;
  auto* verify = app.add_subcommand(
      "verify", "Check approximation guarantees against brute-force optima");
  AddConfigFlags(verify, verify_flags);
  verify->add_option("-r,--report", report_path, "Report CSV path (default stdout)");

  auto* gen = app.add_subcommand("gen", "Generate a seeded synthetic instance");
  gen->require_subcommand(1);
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  std::size_t nodes = 200, edges = 800;
  auto* gen_graph = gen->add_subcommand("graph", "Random directed edge list");
  gen_graph->add_option("--nodes", nodes, "Node count");
  gen_graph->add_option("--edges", edges, "Edge count");
  bool with_p = false;
  gen_graph->add_flag("--with-p", with_p, "Write per-edge probabilities");
  regmax::CoverageSpec spec;
  auto* gen_cov = gen->add_subcommand("coverage", "Weighted coverage instance (JSON)");
  gen_cov->add_option("--elements", spec.elements, "Ground-set size");
  gen_cov->add_option("--items", spec.items, "Item count");
  gen_cov->add_option("--density", spec.density, "Probability an element covers an item");
  gen_cov->add_option("--cost-lo", spec.cost_lo, "Lower end of the uniform cost range");
  gen_cov->add_option("--cost-hi", spec.cost_hi, "Upper end of the uniform cost range");
  std::size_t design_n = 8, design_d = 3;
  auto* gen_design = gen->add_subcommand("design", "Feature CSV for A-optimal design");
  gen_design->add_option("--n", design_n, "Number of measurements");
  gen_design->add_option("--d", design_d, "Feature dimension");
  for (auto* sub : {gen_graph, gen_cov, gen_design}) {
    sub->add_option("--seed", gen_seed, "Generator seed");
    sub->add_option("-o,--out", gen_out, "Output file (default stdout)");
  }

  std::string trace_path;
  auto* inspect = app.add_subcommand("inspect", "Pretty-print a JSON run trace");
  inspect->add_option("trace", trace_path, "Trace file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return RunCommand(run_flags);
    if (verify->parsed()) return VerifyCommand(verify_flags, report_path);
    if (inspect->parsed()) return InspectCommand(trace_path);
    if (gen_graph->parsed()) {
      std::ostringstream out;
      regmax::WriteEdgeList(out, regmax::GenerateRandomDigraph(nodes, edges, gen_seed), with_p);
      WriteText(gen_out, out.str());
    } else if (gen_cov->parsed()) {
      WriteText(gen_out, regmax::CoverageToJson(regmax::GenerateCoverage(spec, gen_seed)) + "\n");
    } else if (gen_design->parsed()) {
      const Eigen::MatrixXd x = regmax::GenerateFeatures(design_n, design_d, gen_seed);
      std::string text;
      for (std::size_t j = 0; j < design_d; ++j) text += (j ? ",x" : "x") + std::to_string(j);
      text += "\n";
      for (Eigen::Index e = 0; e < x.cols(); ++e) {
        for (Eigen::Index j = 0; j < x.rows(); ++j) {
          text += (j ? "," : "") + regmax::FormatDouble(x(j, e));
        }
        text += "\n";
      }
      WriteText(gen_out, text);
    }
    return 0;
  } catch (const regmax::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const regmax::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
