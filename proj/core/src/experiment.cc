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

#include "regmax/experiment.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "regmax/algorithms.h"
#include "regmax/bounds.h"
#include "regmax/errors.h"
#include "regmax/ground_truth.h"
#include "regmax/influence.h"
#include "regmax/noisy_oracle.h"
#include "regmax/random.h"
#include "regmax/run_trace.h"
#include "regmax/vertex_cover.h"
#include "regmax/work_pool.h"

namespace regmax {
namespace {

namespace pt = boost::property_tree;

// ---------------------------------------------------------------------------
// Config parsing.

const std::set<std::string> kAlgorithmTypes = {
    "up", "gamma-roi", "threshold-roi", "udg", "gamma-guess", "pm"};

template <typename T>
T ParseValue(const std::string& where, const std::string& text);

template <>
double ParseValue<double>(const std::string& where, const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(where + ": expected a number, got '" + text + "'");
  }
  return value;
}

template <>
long long ParseValue<long long>(const std::string& where, const std::string& text) {
  long long value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(where + ": expected an integer, got '" + text + "'");
  }
  return value;
}

template <>
bool ParseValue<bool>(const std::string& where, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(where + ": expected a boolean, got '" + text + "'");
}

std::string TrimCopy(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitList(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) {
    item = TrimCopy(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Reads a section, rejecting keys outside `allowed`.
class Section {
 public:
  Section(const pt::ptree* tree, std::string name, std::set<std::string> allowed)
      : tree_(tree), name_(std::move(name)) {
    if (!tree_) return;
    for (const auto& [key, child] : *tree_) {
      if (!child.empty()) {
        throw ConfigError("[" + name_ + "] must not contain nested keys");
      }
      if (!allowed.count(key)) {
        throw ConfigError("[" + name_ + "] unknown key '" + key + "'");
      }
    }
  }

  std::optional<std::string> Raw(const std::string& key) const {
    if (!tree_) return std::nullopt;
    const auto child = tree_->get_child_optional(pt::ptree::path_type(key, '\0'));
    if (!child) return std::nullopt;
    return TrimCopy(child->data());
  }

  template <typename T>
  void Read(const std::string& key, T& out) const {
    if (const auto raw = Raw(key)) out = ParseValue<T>(Where(key), *raw);
  }

  void Read(const std::string& key, std::string& out) const {
    if (const auto raw = Raw(key)) out = *raw;
  }

  void ReadCount(const std::string& key, std::size_t& out) const {
    if (const auto raw = Raw(key)) {
      const long long v = ParseValue<long long>(Where(key), *raw);
      if (v < 0) throw ConfigError(Where(key) + ": must be >= 0");
      out = static_cast<std::size_t>(v);
    }
  }

  std::string Where(const std::string& key) const { return name_ + "." + key; }

 private:
  const pt::ptree* tree_;
  std::string name_;
};

std::vector<double> ParseSweepValues(const std::string& where,
                                     const std::string& text) {
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    const auto parts = SplitList(text, ':');
    if (parts.size() != 2 && parts.size() != 3) {
      throw ConfigError(where + ": range must be 'lo:hi' or 'lo:hi:step'");
    }
    const double lo = ParseValue<double>(where, parts[0]);
    const double hi = ParseValue<double>(where, parts[1]);
    const double step = parts.size() == 3 ? ParseValue<double>(where, parts[2]) : 1.0;
    if (!(step > 0.0) || hi < lo) throw ConfigError(where + ": empty or invalid range");
    const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (long long k = 0; k < count; ++k) values.push_back(lo + static_cast<double>(k) * step);
  } else {
    for (const auto& item : SplitList(text, ',')) {
      values.push_back(ParseValue<double>(where, item));
    }
  }
  if (values.empty()) throw ConfigError(where + ": sweep range is empty");
  return values;
}

void ApplyOverride(pt::ptree& tree, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("override '" + assignment + "' must look like section.key=value");
  }
  const std::string path = TrimCopy(assignment.substr(0, eq));
  const auto dot = path.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == path.size()) {
    throw ConfigError("override '" + assignment + "' must name section.key");
  }
  const std::string section = path.substr(0, dot);
  const std::string key = path.substr(dot + 1);
  auto& child = tree.get_child_optional(pt::ptree::path_type(section, '\0'))
                    ? tree.get_child(pt::ptree::path_type(section, '\0'))
                    : tree.push_back({section, pt::ptree()})->second;
  child.put(pt::ptree::path_type(key, '\0'), TrimCopy(assignment.substr(eq + 1)));
}

ExperimentConfig FromTree(const pt::ptree& tree) {
  static const std::set<std::string> kSections = {"experiment", "dataset", "cost",
                                                  "sweep"};
  ExperimentConfig cfg;
  for (const auto& [name, child] : tree) {
    if (child.empty() && !child.data().empty()) {
      throw ConfigError("key '" + name + "' appears outside any section");
    }
    if (!kSections.count(name) && name.rfind("algorithm:", 0) != 0) {
      throw ConfigError("unknown section [" + name + "]");
    }
  }
  auto child = [&](const std::string& name) -> const pt::ptree* {
    const auto c = tree.get_child_optional(pt::ptree::path_type(name, '\0'));
    return c ? &*c : nullptr;
  };

  const Section exp(child("experiment"), "experiment",
                    {"application", "seed", "output", "threads", "verify", "traces"});
  std::string application = "synthetic-coverage";
  exp.Read("application", application);
  cfg.application = ParseApplication(application);
  long long seed = static_cast<long long>(cfg.seed);
  exp.Read("seed", seed);
  if (seed < 0) throw ConfigError("experiment.seed must be >= 0");
  cfg.seed = static_cast<std::uint64_t>(seed);
  exp.Read("output", cfg.output_dir);
  exp.ReadCount("threads", cfg.threads);
  exp.Read("verify", cfg.verify);
  exp.Read("traces", cfg.traces);

  const Section data(child("dataset"), "dataset",
                     {"path", "weights", "drop_columns", "normalize", "instances",
                      "nodes", "edges", "rr_sets", "elements", "items", "density",
                      "n", "d"});
  data.Read("path", cfg.dataset);
  data.Read("weights", cfg.weights);
  if (const auto raw = data.Raw("drop_columns")) cfg.drop_columns = SplitList(*raw, ',');
  data.Read("normalize", cfg.normalize);
  data.ReadCount("instances", cfg.instances);
  data.ReadCount("nodes", cfg.nodes);
  data.ReadCount("edges", cfg.edges);
  data.ReadCount("rr_sets", cfg.rr_sets);
  data.ReadCount("elements", cfg.coverage.elements);
  data.ReadCount("items", cfg.coverage.items);
  data.Read("density", cfg.coverage.density);
  data.ReadCount("n", cfg.design_n);
  data.ReadCount("d", cfg.design_d);
  if (cfg.instances == 0) throw ConfigError("dataset.instances must be >= 1");
  if (!cfg.dataset.empty() && cfg.instances != 1) {
    throw ConfigError("dataset.instances applies to synthetic data only");
  }

  const Section cost(child("cost"), "cost",
                     {"q", "lambda1", "lambda2", "p", "lo", "hi"});
  long long q = cfg.q;
  cost.Read("q", q);
  if (q < 0) throw ConfigError("cost.q must be >= 0");
  cfg.q = static_cast<int>(q);
  cost.Read("lambda1", cfg.lambda1);
  cost.Read("lambda2", cfg.lambda2);
  cost.Read("p", cfg.p);
  cost.Read("lo", cfg.coverage.cost_lo);
  cost.Read("hi", cfg.coverage.cost_hi);
  if (!(cfg.lambda1 > 0.0 && cfg.lambda2 > 0.0)) {
    throw ConfigError("cost.lambda1 and cost.lambda2 must be > 0");
  }
  if (!(cfg.p > 0.0 && cfg.p <= 1.0)) throw ConfigError("cost.p must be in (0, 1]");
  if (!(cfg.coverage.cost_lo > 0.0 && cfg.coverage.cost_hi >= cfg.coverage.cost_lo)) {
    throw ConfigError("cost.lo must be > 0 and cost.hi >= cost.lo");
  }

  const Section sweep(child("sweep"), "sweep", {"param", "values"});
  sweep.Read("param", cfg.sweep_param);
  if (!cfg.sweep_param.empty()) {
    static const std::set<std::string> kParams = {"q", "lambda1", "lambda2", "p"};
    if (!kParams.count(cfg.sweep_param)) {
      throw ConfigError("sweep.param must be one of q, lambda1, lambda2, p");
    }
    const auto raw = sweep.Raw("values");
    if (!raw) throw ConfigError("sweep.values is required when sweep.param is set");
    cfg.sweep_values = ParseSweepValues("sweep.values", *raw);
  } else if (sweep.Raw("values")) {
    throw ConfigError("sweep.values given without sweep.param");
  }

  for (const auto& [name, node] : tree) {
    if (name.rfind("algorithm:", 0) != 0) continue;
    AlgorithmSpec spec;
    spec.label = name.substr(10);
    if (spec.label.empty()) throw ConfigError("[algorithm:] needs a label");
    const Section s(&node, name,
                    {"type", "epsilon", "gamma", "repetitions", "decay", "runner",
                     "noise_delta", "inner", "max_iterations"});
    s.Read("type", spec.type);
    if (!kAlgorithmTypes.count(spec.type)) {
      throw ConfigError(s.Where("type") + ": unknown algorithm '" + spec.type + "'");
    }
    if (spec.type == "udg") spec.repetitions = 10;
    s.Read("epsilon", spec.epsilon);
    if (const auto raw = s.Raw("gamma")) {
      spec.gamma = *raw == "empirical" ? 0.0 : ParseValue<double>(s.Where("gamma"), *raw);
      if (*raw != "empirical" && !(spec.gamma > 0.0 && spec.gamma <= 1.0)) {
        throw ConfigError(s.Where("gamma") + ": must be in (0, 1] or 'empirical'");
      }
    }
    long long reps = spec.repetitions;
    s.Read("repetitions", reps);
    if (reps < 1) throw ConfigError(s.Where("repetitions") + ": must be >= 1");
    spec.repetitions = static_cast<int>(reps);
    s.Read("decay", spec.decay);
    s.Read("runner", spec.runner);
    s.Read("noise_delta", spec.noise_delta);
    s.Read("inner", spec.inner);
    long long iters = spec.max_iterations;
    s.Read("max_iterations", iters);
    spec.max_iterations = static_cast<int>(iters);
    if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0)) {
      throw ConfigError(s.Where("epsilon") + ": must be in (0, 1)");
    }
    if (!(spec.decay > 0.0 && spec.decay < 1.0)) {
      throw ConfigError(s.Where("decay") + ": must be in (0, 1)");
    }
    if (spec.runner != "up" && spec.runner != "udg") {
      throw ConfigError(s.Where("runner") + ": must be up or udg");
    }
    if (spec.noise_delta < 0.0) throw ConfigError(s.Where("noise_delta") + ": must be >= 0");
    if (spec.noise_delta > 0.0 && spec.type != "up") {
      throw ConfigError(s.Where("noise_delta") + ": only supported for type up");
    }
    try {
      ParsePmInner(spec.inner);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(s.Where("inner") + ": " + e.what());
    }
    if (spec.type == "pm" && cfg.application != Application::kInfluence) {
      throw ConfigError(s.Where("type") + ": pm needs application = influence");
    }
    if (spec.max_iterations < 1) throw ConfigError(s.Where("max_iterations") + ": must be >= 1");
    cfg.algorithms.push_back(std::move(spec));
  }
  if (cfg.algorithms.empty()) throw ConfigError("no [algorithm:<label>] sections");

  for (const auto& path : {cfg.dataset, cfg.weights}) {
    if (!path.empty() && !std::filesystem::exists(path)) {
      throw ConfigError("referenced file does not exist: " + path);
    }
  }
  if (!cfg.weights.empty() && cfg.application != Application::kVertexCover) {
    throw ConfigError("dataset.weights applies to vertexcover only");
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Instances.

struct Problem {
  std::unique_ptr<ValueOracle> oracle;
  CostVector cost;
};

// Everything needed to run algorithms at one (sweep point, instance).
struct Point {
  double sweep_value = 0.0;
  std::size_t index = 0;  // sweep point index
  std::size_t instance = 0;
  std::function<Problem()> make;
  std::shared_ptr<const Digraph> graph;  // influence only
  CostVector cost;                       // copy of make().cost
  std::size_t n = 0;
  std::optional<OptResult> opt;
  std::optional<double> ratio;
};

std::uint64_t LabelHash(const std::string& label) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t InstanceSeed(const ExperimentConfig& cfg, std::size_t instance) {
  return DeriveSeed(cfg.seed, {0x1157, instance});
}

// Run seeds depend on the algorithm label and repetition only, so every
// sweep point sees the same random draws.
std::uint64_t RunSeed(const ExperimentConfig& cfg, const AlgorithmSpec& spec, int rep) {
  return DeriveSeed(cfg.seed, {0x52a1, LabelHash(spec.label),
                               static_cast<std::uint64_t>(rep)});
}

std::vector<Point> BuildPoints(const ExperimentConfig& cfg) {
  std::vector<double> sweep = cfg.sweep_values;
  if (cfg.sweep_param.empty()) sweep = {0.0};
  std::vector<Point> points;

  if (!cfg.sweep_param.empty() && cfg.application == Application::kSyntheticCoverage) {
    throw ConfigError("synthetic-coverage has no sweepable cost parameter");
  }
  if (cfg.sweep_param == "q") {
    for (double v : sweep) {
      if (v < 0 || v != std::floor(v)) {
        throw ConfigError("sweep values for q must be non-negative integers");
      }
    }
  }
  for (std::size_t k = 0; k < cfg.instances; ++k) {
    for (std::size_t s = 0; s < sweep.size(); ++s) {
      Point point;
      point.sweep_value = cfg.sweep_param.empty() ? 0.0 : sweep[s];
      point.index = s;
      point.instance = k;
      points.push_back(std::move(point));
    }
  }

  // Load or generate the per-instance data once and bind it into the points.
  for (std::size_t k = 0; k < cfg.instances; ++k) {
    const std::uint64_t seed = InstanceSeed(cfg, k);
    switch (cfg.application) {
      case Application::kSyntheticCoverage: {
        auto inst = std::make_shared<const CoverageInstance>(
            cfg.dataset.empty() ? GenerateCoverage(cfg.coverage, seed)
                                : LoadCoverage(cfg.dataset));
        for (auto& p : points) {
          if (p.instance != k) continue;
          p.make = [inst] { return Problem{inst->MakeOracle(), inst->MakeCost()}; };
        }
        break;
      }
      case Application::kVertexCover: {
        auto graph = std::make_shared<const Digraph>(
            cfg.dataset.empty() ? GenerateRandomDigraph(cfg.nodes, cfg.edges, seed)
                                : LoadEdgeList(cfg.dataset));
        std::vector<double> weights;
        if (!cfg.weights.empty()) weights = LoadNodeWeights(cfg.weights, graph->num_nodes());
        for (auto& p : points) {
          if (p.instance != k) continue;
          const int q = cfg.sweep_param == "q" ? static_cast<int>(p.sweep_value) : cfg.q;
          auto inst = std::make_shared<const CoverInstance>(*graph, weights, q);
          p.make = [inst] {
            return Problem{std::make_unique<VertexCoverOracle>(inst), VcCost(*inst)};
          };
        }
        break;
      }
      case Application::kInfluence: {
        auto graph = std::make_shared<const Digraph>(
            cfg.dataset.empty() ? GenerateRandomDigraph(cfg.nodes, cfg.edges, seed)
                                : LoadEdgeList(cfg.dataset));
        const std::size_t theta = cfg.rr_sets ? cfg.rr_sets : 10 * graph->num_nodes();
        auto rr = std::make_shared<const RRSetCollection>(
            SampleRRSets(*graph, theta, DeriveSeed(seed, {0xe7a1})));
        for (auto& p : points) {
          if (p.instance != k) continue;
          const double l1 = cfg.sweep_param == "lambda1" ? p.sweep_value : cfg.lambda1;
          const double l2 = cfg.sweep_param == "lambda2" ? p.sweep_value : cfg.lambda2;
          CostVector cost = DegreeCost(*graph, l1, l2);
          p.graph = graph;
          p.make = [rr, cost] {
            return Problem{std::make_unique<RRCoverageOracle>(rr), cost};
          };
        }
        break;
      }
      case Application::kAOptimal: {
        Eigen::MatrixXd features;
        if (cfg.dataset.empty()) {
          features = GenerateFeatures(cfg.design_n, cfg.design_d, seed);
        } else {
          CsvOptions options;
          options.drop_columns = cfg.drop_columns;
          options.normalize = cfg.normalize;
          features = LoadFeatureCsv(cfg.dataset, options).rows.transpose();
        }
        for (auto& p : points) {
          if (p.instance != k) continue;
          const double pp = cfg.sweep_param == "p" ? p.sweep_value : cfg.p;
          auto inst = std::make_shared<const DesignInstance>(features, Eigen::MatrixXd(),
                                                             0.0, pp);
          p.make = [inst] {
            auto oracle = std::make_unique<AOptimalOracle>(inst);
            CostVector cost = ProportionalCost(*oracle, inst->p());
            oracle->ResetCalls();
            return Problem{std::move(oracle), std::move(cost)};
          };
        }
        break;
      }
    }
  }
  for (auto& p : points) {
    Problem probe = p.make();
    p.n = probe.oracle->size();
    p.cost = probe.cost;
  }
  // Deterministic order: sweep point, then instance.
  std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.index != b.index ? a.index < b.index : a.instance < b.instance;
  });
  return points;
}

void AttachGroundTruth(Point& point, bool need_opt, bool need_ratio,
                       std::vector<std::string>& warnings) {
  Problem problem = point.make();
  if (need_opt) {
    if (point.n <= kBruteForceCap) {
      point.opt = BruteForceOpt(*problem.oracle, problem.cost);
    } else {
      warnings.push_back("n=" + std::to_string(point.n) +
                         " exceeds the brute-force cap; bounds not checked");
    }
  }
  if (need_ratio && point.n <= kRatioCap) {
    point.ratio = EmpiricalSubmodularityRatio(*problem.oracle);
  }
}

// ---------------------------------------------------------------------------
// Dispatch.

struct Outcome {
  RunTrace trace;
  double best_value = 0.0;  // true objective of trace.best
  std::int64_t calls = 0;
  double gamma = 1.0;
  std::optional<double> bound_gamma;  // gamma-guess: gamma of the bound
};

double ResolveGamma(const AlgorithmSpec& spec, const Point& point) {
  if (spec.gamma > 0.0) return spec.gamma;
  if (!point.ratio) {
    throw ConfigError("algorithm '" + spec.label +
                      "' asks for the empirical gamma but n=" + std::to_string(point.n) +
                      " exceeds the ratio cap");
  }
  return std::max(*point.ratio, 1e-12);
}

Outcome RunOne(const AlgorithmSpec& spec, const Point& point, std::uint64_t seed) {
  Problem problem = point.make();
  ValueOracle& oracle = *problem.oracle;
  Outcome out;
  if (spec.type == "gamma-guess") {
    const GuessRunner runner = spec.runner == "up" ? UpRunner(spec.epsilon) : UdgRunner(seed);
    GuessResult guess = GammaGuess(runner, oracle, problem.cost, spec.decay);
    out.trace = std::move(guess.best);
    out.calls = guess.total_calls;
    out.gamma = guess.gammas[guess.chosen_round];
    if (point.ratio && spec.runner == "up") {
      for (double g : guess.gammas) {
        if (g <= *point.ratio) {
          out.bound_gamma = g;
          break;
        }
      }
    }
  } else if (spec.type == "pm") {
    PmConfig pm;
    pm.eps_prime = spec.epsilon;
    pm.inner = ParsePmInner(spec.inner);
    pm.max_iterations = spec.max_iterations;
    pm.seed = seed;
    const PmResult result = PmMaximize(*point.graph, problem.cost, pm);
    out.trace.algorithm = "pm";
    out.trace.params = {{"eps_prime", spec.epsilon},
                        {"iterations", static_cast<double>(result.iterations.size())}};
    double value_cost = 0.0;
    std::vector<Element> prefix;
    for (Element e : result.solution) {
      prefix.push_back(e);
      value_cost += problem.cost[e];
      out.trace.RecordAdd(e, oracle.Compute(prefix) - value_cost, 0.0, 0.0);
    }
    out.trace.SelectBestPrefix();
    for (const auto& it : result.iterations) out.calls += it.oracle_calls;
    out.trace.oracle_calls = out.calls;
  } else {
    out.gamma = ResolveGamma(spec, point);
    const SubmodularityRatio gamma(out.gamma);
    std::unique_ptr<NoisyOracle> noisy;
    ValueOracle* target = &oracle;
    if (spec.noise_delta > 0.0) {
      noisy = std::make_unique<NoisyOracle>(oracle, spec.noise_delta, seed);
      target = noisy.get();
    }
    if (spec.type == "up") {
      out.trace = UpMaximize(*target, problem.cost, UpConfig(gamma, spec.epsilon));
      if (noisy) out.trace.params["noise_delta"] = spec.noise_delta;
    } else if (spec.type == "gamma-roi") {
      out.trace = GammaRoi(*target, problem.cost, gamma);
    } else if (spec.type == "threshold-roi") {
      out.trace = ThresholdRoi(*target, problem.cost, gamma, spec.epsilon);
    } else if (spec.type == "udg") {
      out.trace = Udg(*target, problem.cost, gamma, seed);
    } else {
      throw ConfigError("unknown algorithm type '" + spec.type + "'");
    }
    out.calls = out.trace.oracle_calls;
  }
  out.trace.seed = seed;
  out.best_value = oracle.Compute(out.trace.best) - problem.cost.Cost(out.trace.best);
  if (spec.noise_delta == 0.0 && spec.type != "pm") out.best_value = out.trace.best_value;
  return out;
}

// Right-hand side of the guarantee that applies to `spec`, if any.
std::optional<double> BoundFor(const AlgorithmSpec& spec, const Point& point,
                               const Outcome& outcome, std::string& theorem) {
  if (!point.opt) return std::nullopt;
  const double f = point.opt->utility;
  const double c = point.opt->cost;
  if (spec.type == "up" && spec.noise_delta > 0.0) {
    theorem = "noisy-up";
    return NoisyUpBound(f, c, outcome.gamma, spec.epsilon, spec.noise_delta, point.n,
                        point.cost.min(), point.cost.max());
  }
  if (spec.type == "up" || spec.type == "threshold-roi") {
    theorem = spec.type == "up" ? "up" : "threshold";
    return UpBound(f, c, outcome.gamma, spec.epsilon);
  }
  if (spec.type == "gamma-roi") {
    theorem = "roi";
    return RoiBound(f, c, outcome.gamma);
  }
  if (spec.type == "gamma-guess" && outcome.bound_gamma) {
    theorem = "up";
    return UpBound(f, c, *outcome.bound_gamma, spec.epsilon);
  }
  return std::nullopt;
}

std::string ParamsString(const RunTrace& trace) {
  std::string out;
  for (const auto& [key, value] : trace.params) {
    if (!out.empty()) out += ';';
    out += key + "=" + FormatDouble(value);
  }
  return out;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

const char* ApplicationName(Application app) {
  switch (app) {
    case Application::kInfluence:
      return "influence";
    case Application::kVertexCover:
      return "vertexcover";
    case Application::kAOptimal:
      return "aoptimal";
    case Application::kSyntheticCoverage:
      return "synthetic-coverage";
  }
  return "?";
}

Application ParseApplication(const std::string& name) {
  if (name == "influence") return Application::kInfluence;
  if (name == "vertexcover") return Application::kVertexCover;
  if (name == "aoptimal") return Application::kAOptimal;
  if (name == "synthetic-coverage") return Application::kSyntheticCoverage;
  throw ConfigError("unknown application '" + name +
                    "' (expected influence, vertexcover, aoptimal or synthetic-coverage)");
}

ExperimentConfig ParseExperimentConfig(std::istream& in,
                                       const std::vector<std::string>& overrides) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  for (const auto& o : overrides) ApplyOverride(tree, o);
  return FromTree(tree);
}

ExperimentConfig LoadExperimentConfig(const std::string& path,
                                      const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  try {
    return ParseExperimentConfig(in, overrides);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string FormatDouble(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  ExperimentResult result;
  std::vector<Point> points = BuildPoints(config);
  const bool need_ratio = std::any_of(
      config.algorithms.begin(), config.algorithms.end(), [&](const AlgorithmSpec& s) {
        return s.gamma <= 0.0 || (config.verify && s.type == "gamma-guess");
      });
  for (auto& point : points) {
    AttachGroundTruth(point, config.verify, need_ratio, result.warnings);
  }

  struct Task {
    std::size_t point;
    std::size_t algorithm;
    int rep;
  };
  std::vector<Task> tasks;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      for (int r = 0; r < config.algorithms[a].repetitions; ++r) tasks.push_back({p, a, r});
    }
  }

  result.rows.resize(tasks.size());
  std::vector<RunTrace> traces(config.traces ? tasks.size() : 0);
  ParallelFor(tasks.size(), config.threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    const Point& point = points[task.point];
    const AlgorithmSpec& spec = config.algorithms[task.algorithm];
    const std::uint64_t seed = RunSeed(config, spec, task.rep);
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = RunOne(spec, point, seed);
    const auto stop = std::chrono::steady_clock::now();

    ResultRow& row = result.rows[i];
    row.sweep_value = point.sweep_value;
    row.instance = point.instance;
    row.algorithm = spec.label;
    row.type = spec.type;
    row.params = ParamsString(outcome.trace);
    row.repetition = task.rep;
    row.seed = seed;
    row.best_value = outcome.best_value;
    row.oracle_calls = outcome.calls;
    row.solution_size = outcome.trace.best.size();
    row.wall_seconds = std::chrono::duration<double>(stop - start).count();
    if (config.verify && point.opt) {
      std::string theorem;
      if (!LossTermDefined(point.opt->utility, point.opt->cost)) {
        row.bound_ok = "skip";
      } else if (const auto rhs = BoundFor(spec, point, outcome, theorem)) {
        row.bound_rhs = *rhs;
        row.bound_ok = outcome.best_value >= *rhs ? "true" : "false";
      }
    }
    if (config.traces) traces[i] = std::move(outcome.trace);
  });

  // Summaries over repetitions, in task order.
  for (std::size_t i = 0; i < tasks.size();) {
    std::size_t j = i;
    std::vector<double> values;
    double calls = 0.0;
    SummaryRow summary;
    summary.bound_ok = result.rows[i].bound_ok;
    while (j < tasks.size() && tasks[j].point == tasks[i].point &&
           tasks[j].algorithm == tasks[i].algorithm) {
      values.push_back(result.rows[j].best_value);
      calls += static_cast<double>(result.rows[j].oracle_calls);
      if (result.rows[j].bound_ok == "false") summary.bound_ok = "false";
      ++j;
    }
    summary.sweep_value = result.rows[i].sweep_value;
    summary.instance = result.rows[i].instance;
    summary.algorithm = result.rows[i].algorithm;
    summary.type = result.rows[i].type;
    summary.repetitions = static_cast<int>(values.size());
    summary.median_best_value = Median(values);
    summary.mean_oracle_calls = calls / static_cast<double>(values.size());
    result.summary.push_back(std::move(summary));
    i = j;
  }

  for (const auto& point : points) {
    for (const auto& spec : config.algorithms) {
      if (point.ratio && spec.gamma > *point.ratio + 1e-12) {
        result.warnings.push_back("algorithm '" + spec.label + "' uses gamma=" +
                                  FormatDouble(spec.gamma) +
                                  " above the empirical ratio " +
                                  FormatDouble(*point.ratio) + "; its bound is void");
      }
    }
  }

  if (config.traces) {
    result.traces = std::move(traces);
  }
  return result;
}

std::string RowsCsv(const std::vector<ResultRow>& rows) {
  std::string out =
      "sweep_value,instance,algorithm,type,params,repetition,seed,best_value,"
      "oracle_calls,solution_size,bound_ok,bound_rhs\n";
  for (const auto& r : rows) {
    out += FormatDouble(r.sweep_value) + "," + std::to_string(r.instance) + "," +
           CsvField(r.algorithm) + "," + r.type + "," + CsvField(r.params) + "," +
           std::to_string(r.repetition) + "," + std::to_string(r.seed) + "," +
           FormatDouble(r.best_value) + "," + std::to_string(r.oracle_calls) + "," +
           std::to_string(r.solution_size) + "," + r.bound_ok + "," +
           FormatDouble(r.bound_rhs) + "\n";
  }
  return out;
}

std::string SummaryCsv(const std::vector<SummaryRow>& rows) {
  std::string out =
      "sweep_value,instance,algorithm,type,repetitions,median_best_value,"
      "mean_oracle_calls,bound_ok\n";
  for (const auto& r : rows) {
    out += FormatDouble(r.sweep_value) + "," + std::to_string(r.instance) + "," +
           CsvField(r.algorithm) + "," + r.type + "," + std::to_string(r.repetitions) +
           "," + FormatDouble(r.median_best_value) + "," +
           FormatDouble(r.mean_oracle_calls) + "," + r.bound_ok + "\n";
  }
  return out;
}

void WriteExperiment(const ExperimentConfig& config, const ExperimentResult& result) {
  namespace fs = std::filesystem;
  const fs::path dir(config.output_dir);
  fs::create_directories(dir);
  WriteFile(dir / "rows.csv", RowsCsv(result.rows));
  WriteFile(dir / "summary.csv", SummaryCsv(result.summary));
  std::string timing = "sweep_value,instance,algorithm,repetition,wall_seconds\n";
  for (const auto& r : result.rows) {
    timing += FormatDouble(r.sweep_value) + "," + std::to_string(r.instance) + "," +
              CsvField(r.algorithm) + "," + std::to_string(r.repetition) + "," +
              FormatDouble(r.wall_seconds) + "\n";
  }
  WriteFile(dir / "timing.csv", timing);
  if (!result.traces.empty()) {
    const fs::path trace_dir = dir / "traces";
    fs::create_directories(trace_dir);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      const auto& r = result.rows[i];
      const std::string name = r.algorithm + "_s" + FormatDouble(r.sweep_value) + "_i" +
                               std::to_string(r.instance) + "_r" +
                               std::to_string(r.repetition) + ".json";
      WriteFile(trace_dir / name, TraceToJson(result.traces[i]) + "\n");
    }
  }
}

BoundReport VerifyBounds(const ExperimentConfig& config) {
  BoundReport report;
  std::vector<Point> points = BuildPoints(config);
  const bool need_ratio = std::any_of(
      config.algorithms.begin(), config.algorithms.end(), [](const AlgorithmSpec& s) {
        return s.gamma <= 0.0 || s.type == "gamma-guess";
      });
  for (auto& point : points) {
    if (point.n > kBruteForceCap) {
      throw CapExceededError("verify needs brute-forcible instances", point.n,
                             kBruteForceCap);
    }
    AttachGroundTruth(point, true, need_ratio, report.warnings);
  }

  for (const auto& point : points) {
    const OptResult& opt = *point.opt;
    for (const auto& spec : config.algorithms) {
      BoundCheck check;
      check.instance = point.instance;
      check.sweep_value = point.sweep_value;
      check.algorithm = spec.label;
      check.f_opt = opt.utility;
      check.c_opt = opt.cost;
      check.opt_value = opt.value;
      if (point.ratio && spec.gamma > *point.ratio + 1e-12) {
        report.warnings.push_back("algorithm '" + spec.label + "' uses gamma=" +
                                  FormatDouble(spec.gamma) + " above the empirical ratio " +
                                  FormatDouble(*point.ratio) + " on instance " +
                                  std::to_string(point.instance));
      }

      std::optional<double> rhs;
      if (spec.type == "udg") {
        check.theorem = "udg-mean";
        std::vector<double> values;
        for (int r = 0; r < spec.repetitions; ++r) {
          values.push_back(RunOne(spec, point, RunSeed(config, spec, r)).best_value);
        }
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        const double se = values.size() > 1
                              ? std::sqrt(var / static_cast<double>(values.size() - 1) /
                                          static_cast<double>(values.size()))
                              : 0.0;
        check.gamma = ResolveGamma(spec, point);
        check.best_value = mean - 3.0 * se;
        rhs = UdgExpectationBound(opt.utility, opt.cost, check.gamma);
      } else if (spec.type == "pm") {
        check.theorem = "none";
        check.status = "skip";
        check.reason = "no per-instance guarantee checked for pm";
      } else {
        const Outcome outcome = RunOne(spec, point, RunSeed(config, spec, 0));
        check.best_value = outcome.best_value;
        check.gamma = outcome.bound_gamma.value_or(outcome.gamma);
        if (!LossTermDefined(opt.utility, opt.cost)) {
          check.status = "skip";
          check.reason = "OPT is empty, loss term undefined";
        } else {
          rhs = BoundFor(spec, point, outcome, check.theorem);
          if (!rhs) {
            check.status = "skip";
            check.reason = "no applicable bound (empirical ratio unavailable)";
          }
        }
      }
      if (rhs && check.status.empty()) {
        check.rhs = *rhs;
        check.slack = check.best_value - check.rhs;
        check.status = check.slack >= 0.0 ? "pass" : "fail";
      }
      if (check.status == "pass") ++report.passed;
      if (check.status == "fail") ++report.failed;
      if (check.status == "skip") ++report.skipped;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

std::string BoundReportCsv(const BoundReport& report) {
  std::string out =
      "instance,sweep_value,algorithm,theorem,gamma,f_opt,c_opt,opt_value,best_value,"
      "rhs,slack,status,reason\n";
  for (const auto& c : report.checks) {
    out += std::to_string(c.instance) + "," + FormatDouble(c.sweep_value) + "," +
           CsvField(c.algorithm) + "," + c.theorem + "," + FormatDouble(c.gamma) + "," +
           FormatDouble(c.f_opt) + "," + FormatDouble(c.c_opt) + "," +
           FormatDouble(c.opt_value) + "," + FormatDouble(c.best_value) + "," +
           FormatDouble(c.rhs) + "," + FormatDouble(c.slack) + "," + c.status + "," +
           CsvField(c.reason) + "\n";
  }
  return out;
}

}  // namespace regmax
