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

#ifndef REGMAX_INFLUENCE_H_
#define REGMAX_INFLUENCE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regmax/cost.h"
#include "regmax/element_set.h"
#include "regmax/graph.h"
#include "regmax/oracle.h"

namespace regmax {

// Reverse-reachable sets sampled under the independent-cascade model, plus
// an inverted index from node to the ids of the sets containing it.
struct RRSetCollection {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<int>> sets;
  std::vector<std::vector<std::uint32_t>> sets_of_node;

  std::size_t theta() const { return sets.size(); }
};

// Samples `theta` RR sets. Each picks a uniform root and runs a reverse BFS
// that crosses in-edge (u, v) with probability p(u, v). Throws
// std::invalid_argument for an empty graph or theta < 1.
RRSetCollection SampleRRSets(const Digraph& g, std::size_t theta,
                             std::uint64_t seed);

// f_R(S) = n * (number of RR sets hitting S) / theta. Throws
// std::invalid_argument when theta = 0.
double CoverageValue(const RRSetCollection& rr, std::span<const Element> set);

// f_R as a value oracle. The incremental state walks the inverted index, so
// a gain costs time proportional to the sets containing the element.
class RRCoverageOracle : public ValueOracle {
 public:
  explicit RRCoverageOracle(std::shared_ptr<const RRSetCollection> rr);

  double Compute(std::span<const Element> set) const override;
  std::unique_ptr<OracleState> NewState() const override;
  std::string name() const override { return "rr-coverage"; }

  const RRSetCollection& collection() const { return *rr_; }

 private:
  std::shared_ptr<const RRSetCollection> rr_;
};

// c(v) = lambda1 * d(v)^lambda2 with d the out-degree, and c(v) = 1 when
// d(v) = 0. Both lambdas must be positive.
CostVector DegreeCost(const Digraph& g, double lambda1, double lambda2);

// Larger root of (x + 1)(x + 2) / x^2 = k, i.e. of (k - 1) x^2 - 3x - 2 = 0.
// Empty when there is no positive root (k <= 1 or k not finite).
std::optional<double> LargerRootEps1(double k);

// Larger root of 2 (eps1 + 1) / x^2 = k. Empty when k <= 0.
std::optional<double> LargerRootEps2(double eps1, double k);

enum class PmInner { kUp, kGammaRoi, kThresholdRoi };

struct PmConfig {
  double eps_prime = 0.2;
  // Failure probability; <= 0 selects 1 / n.
  double delta = 0.0;
  // Initial number of RR sets; 0 selects n.
  std::size_t theta0 = 0;
  PmInner inner = PmInner::kUp;
  // Epsilon handed to the inner algorithm; <= 0 selects eps_prime.
  double inner_epsilon = 0.0;
  int max_iterations = 30;
  std::uint64_t seed = 0;
};

struct PmIteration {
  int index = 0;  // i, starting at 1
  std::size_t theta = 0;
  double f_r1 = 0.0;
  double f_r2 = 0.0;
  double cost = 0.0;
  double t = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  bool failed = false;
  std::string note;  // why the iteration failed, if it did
  std::vector<Element> solution;
  std::int64_t oracle_calls = 0;
};

struct PmResult {
  ElementSet solution;
  std::vector<PmIteration> iterations;
  // "converged", "budget" (the while-guard stopped the loop) or
  // "max-iterations".
  std::string stop_reason;
};

// Adaptive profit maximization: doubles theta until the estimates from two
// independent RR collections agree within eps_prime. The inner algorithm
// runs with gamma = 1 on the f_{R1} oracle. The eps2 equation is evaluated
// at the current solution.
PmResult PmMaximize(const Digraph& g, const CostVector& cost,
                    const PmConfig& config);

const char* PmInnerName(PmInner inner);
PmInner ParsePmInner(const std::string& name);

}  // namespace regmax

#endif  // REGMAX_INFLUENCE_H_
