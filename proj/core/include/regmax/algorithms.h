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

#ifndef REGMAX_ALGORITHMS_H_
#define REGMAX_ALGORITHMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "regmax/cost.h"
#include "regmax/oracle.h"
#include "regmax/run_trace.h"

namespace regmax {

// Maximizers of h = f - c for monotone gamma-weakly-submodular f and positive
// modular c. Every routine returns the best prefix of its insertion sequence
// (∅ included), so best_value >= 0. Traces record oracle calls charged
// during the run. Runs are sequential and deterministic; concurrent runs
// need separate oracle instances.

struct UpConfig {
  UpConfig(SubmodularityRatio gamma, double epsilon);

  SubmodularityRatio gamma;
  double epsilon;  // in (0, 1)
};

// Per-element re-evaluation cap ceil(ln(n / (gamma * epsilon)) / epsilon).
int UpCounterCap(std::size_t n, double gamma, double epsilon);

// Worst-case oracle calls of UpMaximize: n * (1 + UpCounterCap).
std::int64_t UpCallBudget(std::size_t n, double gamma, double epsilon);

// Priority-queue thresholding (UP). Seeds a max-queue with singleton
// densities, then repeatedly pops (tau, v), re-evaluates v's density d
// against the current solution and accepts v when d >= max(gamma,
// (1 - epsilon) * tau). Rejected elements are re-queued under key d while
// d > gamma and their evaluation count stays below UpCounterCap. Entries
// with key <= gamma are dropped when they reach the top of the queue.
RunTrace UpMaximize(ValueOracle& oracle, const CostVector& cost,
                    const UpConfig& config);

// Density greedy (gamma-ROI): each round scans all remaining elements, takes
// the one with maximal density (smaller id on ties) and adds it iff
// f(v | S) > gamma * c(v). O(n^2) oracle calls.
RunTrace GammaRoi(ValueOracle& oracle, const CostVector& cost,
                  SubmodularityRatio gamma);

// Global-threshold variant (threshold-ROI): tau starts at the largest
// singleton density; while tau > gamma, one pass over the remaining
// elements in id order adds every e with f(e | S) / c(e) >= tau (S grows
// during the pass), then tau <- (1 - epsilon) * tau.
RunTrace ThresholdRoi(ValueOracle& oracle, const CostVector& cost,
                      SubmodularityRatio gamma, double epsilon);

// (1 - gamma / n)^(n - i - 1), the distortion applied to f(e | S) in round i.
double UdgDistortion(std::size_t n, std::size_t i, double gamma);

// Unconstrained distorted greedy (UDG). n rounds; round i draws e uniformly
// from the ground set and adds it when e is new and
// UdgDistortion(n, i, gamma) * f(e | S) - c(e) > 0. Already-chosen draws
// are skipped without an oracle call.
RunTrace Udg(ValueOracle& oracle, const CostVector& cost,
             SubmodularityRatio gamma, std::uint64_t seed);

// Number of extra guessing rounds T = ceil((1/decay) * ln(1/decay)).
int GuessRounds(double decay);

// Inner algorithm for GammaGuess; the last argument is the round index r.
using GuessRunner = std::function<RunTrace(
    ValueOracle&, const CostVector&, SubmodularityRatio, std::size_t)>;

struct GuessResult {
  RunTrace best;                // trace of the winning inner run
  std::int64_t total_calls = 0;  // summed over all inner runs
  std::vector<double> gammas;   // gamma_r = (1 - decay)^r, r = 0..T
  std::vector<double> values;   // best_value of each inner run
  std::size_t chosen_round = 0;
};

// Runs `runner` with gamma_r = (1 - decay)^r for r = 0..T and keeps the run
// with the largest best_value (earliest on ties).
GuessResult GammaGuess(const GuessRunner& runner, ValueOracle& oracle,
                       const CostVector& cost, double decay);

// Convenience runners.
GuessRunner UpRunner(double epsilon);
// Round r of the guess uses seed DeriveSeed(seed, {r}).
GuessRunner UdgRunner(std::uint64_t seed);

}  // namespace regmax

#endif  // REGMAX_ALGORITHMS_H_
