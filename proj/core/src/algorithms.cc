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

#include "regmax/algorithms.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "regmax/random.h"

namespace regmax {
namespace {

void CheckSizes(const ValueOracle& oracle, const CostVector& cost) {
  if (oracle.size() != cost.size()) {
    throw std::invalid_argument("oracle has " + std::to_string(oracle.size()) +
                                " elements but cost vector has " +
                                std::to_string(cost.size()));
  }
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1), got " +
                                std::to_string(epsilon));
  }
}

struct QueueEntry {
  double key;
  Element element;
};

// Max-heap on key; smaller element id first on equal keys.
struct LowerPriority {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.key != b.key) return a.key < b.key;
    return a.element > b.element;
  }
};

// Tracks c(S) alongside a PartialSolution and appends accepted elements to a
// trace.
class TraceRecorder {
 public:
  TraceRecorder(RunTrace& trace, PartialSolution& solution,
                const CostVector& cost)
      : trace_(trace), solution_(solution), cost_(cost) {}

  void Accept(Element e, double key, double density) {
    solution_.Add(e);
    cost_sum_ += cost_[e];
    trace_.RecordAdd(e, solution_.value() - cost_sum_, key, density);
  }

 private:
  RunTrace& trace_;
  PartialSolution& solution_;
  const CostVector& cost_;
  double cost_sum_ = 0.0;
};

}  // namespace

UpConfig::UpConfig(SubmodularityRatio gamma, double epsilon)
    : gamma(gamma), epsilon(epsilon) {
  CheckEpsilon(epsilon);
}

int UpCounterCap(std::size_t n, double gamma, double epsilon) {
  if (n == 0) return 0;
  const double cap =
      std::ceil(std::log(static_cast<double>(n) / (gamma * epsilon)) / epsilon);
  return std::max(1, static_cast<int>(cap));
}

std::int64_t UpCallBudget(std::size_t n, double gamma, double epsilon) {
  return static_cast<std::int64_t>(n) *
         (1 + static_cast<std::int64_t>(UpCounterCap(n, gamma, epsilon)));
}

RunTrace UpMaximize(ValueOracle& oracle, const CostVector& cost,
                    const UpConfig& config) {
  CheckSizes(oracle, cost);
  const std::size_t n = oracle.size();
  const double gamma = config.gamma.value();
  const double epsilon = config.epsilon;
  const int cap = UpCounterCap(n, gamma, epsilon);

  RunTrace trace;
  trace.algorithm = "up";
  trace.params = {{"gamma", gamma}, {"epsilon", epsilon}};
  const std::int64_t start_calls = oracle.calls();

  PartialSolution solution(oracle);
  TraceRecorder recorder(trace, solution, cost);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, LowerPriority> queue;
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<Element>(i);
    const double density = solution.Gain(e) / cost[e];
    if (density > gamma) queue.push({density, e});
  }

  std::vector<int> evaluations(n, 0);
  while (true) {
    while (!queue.empty() && queue.top().key <= gamma) queue.pop();
    if (queue.empty()) break;
    const auto [tau, v] = queue.top();
    queue.pop();
    ++evaluations[v];
    const double density = solution.Gain(v) / cost[v];
    if (density >= std::max(gamma, (1.0 - epsilon) * tau)) {
      recorder.Accept(v, tau, density);
      continue;
    }
    if (evaluations[v] < cap && density > gamma) queue.push({density, v});
  }

  trace.oracle_calls = oracle.calls() - start_calls;
  trace.SelectBestPrefix();
  return trace;
}

RunTrace GammaRoi(ValueOracle& oracle, const CostVector& cost,
                  SubmodularityRatio gamma_ratio) {
  CheckSizes(oracle, cost);
  const std::size_t n = oracle.size();
  const double gamma = gamma_ratio.value();

  RunTrace trace;
  trace.algorithm = "gamma_roi";
  trace.params = {{"gamma", gamma}};
  const std::int64_t start_calls = oracle.calls();

  PartialSolution solution(oracle);
  TraceRecorder recorder(trace, solution, cost);
  for (std::size_t round = 0; round < n; ++round) {
    Element best = -1;
    double best_gain = 0.0;
    double best_density = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = static_cast<Element>(i);
      if (solution.Contains(e)) continue;
      const double gain = solution.Gain(e);
      const double density = gain / cost[e];
      if (best < 0 || density > best_density) {
        best = e;
        best_gain = gain;
        best_density = density;
      }
    }
    if (best < 0 || !(best_gain > gamma * cost[best])) break;
    recorder.Accept(best, gamma, best_density);
  }

  trace.oracle_calls = oracle.calls() - start_calls;
  trace.SelectBestPrefix();
  return trace;
}

RunTrace ThresholdRoi(ValueOracle& oracle, const CostVector& cost,
                      SubmodularityRatio gamma_ratio, double epsilon) {
  CheckSizes(oracle, cost);
  CheckEpsilon(epsilon);
  const std::size_t n = oracle.size();
  const double gamma = gamma_ratio.value();

  RunTrace trace;
  trace.algorithm = "threshold_roi";
  trace.params = {{"gamma", gamma}, {"epsilon", epsilon}};
  const std::int64_t start_calls = oracle.calls();

  PartialSolution solution(oracle);
  TraceRecorder recorder(trace, solution, cost);
  double tau = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<Element>(i);
    tau = std::max(tau, solution.Gain(e) / cost[e]);
  }
  std::size_t passes = 0;
  while (tau > gamma) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = static_cast<Element>(i);
      if (solution.Contains(e)) continue;
      const double density = solution.Gain(e) / cost[e];
      if (density >= tau) recorder.Accept(e, tau, density);
    }
    tau *= 1.0 - epsilon;
    ++passes;
  }
  trace.params["passes"] = static_cast<double>(passes);

  trace.oracle_calls = oracle.calls() - start_calls;
  trace.SelectBestPrefix();
  return trace;
}

double UdgDistortion(std::size_t n, std::size_t i, double gamma) {
  return std::pow(1.0 - gamma / static_cast<double>(n),
                  static_cast<double>(n - i - 1));
}

RunTrace Udg(ValueOracle& oracle, const CostVector& cost,
             SubmodularityRatio gamma_ratio, std::uint64_t seed) {
  CheckSizes(oracle, cost);
  const std::size_t n = oracle.size();
  const double gamma = gamma_ratio.value();

  RunTrace trace;
  trace.algorithm = "udg";
  trace.params = {{"gamma", gamma}};
  trace.seed = seed;
  const std::int64_t start_calls = oracle.calls();

  Rng rng(seed);
  PartialSolution solution(oracle);
  TraceRecorder recorder(trace, solution, cost);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<Element>(rng.Index(n));
    if (solution.Contains(e)) continue;
    const double gain = solution.Gain(e);
    const double distortion = UdgDistortion(n, i, gamma);
    if (distortion * gain - cost[e] > 0.0) {
      recorder.Accept(e, cost[e] / distortion, gain / cost[e]);
    }
  }

  trace.oracle_calls = oracle.calls() - start_calls;
  trace.SelectBestPrefix();
  return trace;
}

int GuessRounds(double decay) {
  if (!(decay > 0.0 && decay < 1.0)) {
    throw std::invalid_argument("decay must lie in (0, 1)");
  }
  return static_cast<int>(std::ceil(std::log(1.0 / decay) / decay));
}

GuessResult GammaGuess(const GuessRunner& runner, ValueOracle& oracle,
                       const CostVector& cost, double decay) {
  const int rounds = GuessRounds(decay);
  GuessResult result;
  for (int r = 0; r <= rounds; ++r) {
    const double gamma = std::pow(1.0 - decay, r);
    RunTrace trace = runner(oracle, cost, SubmodularityRatio(gamma),
                            static_cast<std::size_t>(r));
    result.total_calls += trace.oracle_calls;
    result.gammas.push_back(gamma);
    result.values.push_back(trace.best_value);
    if (r == 0 || trace.best_value > result.best.best_value) {
      result.best = std::move(trace);
      result.chosen_round = static_cast<std::size_t>(r);
    }
  }
  result.best.params["guess_decay"] = decay;
  result.best.params["guess_round"] = static_cast<double>(result.chosen_round);
  return result;
}

GuessRunner UpRunner(double epsilon) {
  return [epsilon](ValueOracle& oracle, const CostVector& cost,
                   SubmodularityRatio gamma, std::size_t) {
    return UpMaximize(oracle, cost, UpConfig(gamma, epsilon));
  };
}

GuessRunner UdgRunner(std::uint64_t seed) {
  return [seed](ValueOracle& oracle, const CostVector& cost,
                SubmodularityRatio gamma, std::size_t round) {
    return Udg(oracle, cost, gamma, DeriveSeed(seed, {round}));
  };
}

}  // namespace regmax
