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

#include "regmax/influence.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "regmax/algorithms.h"
#include "regmax/random.h"

namespace regmax {
namespace {

class RRCoverageState : public OracleState {
 public:
  explicit RRCoverageState(const RRSetCollection& rr)
      : rr_(rr), covered_(rr.theta(), 0) {}

  double value() const override { return Scale(count_); }

  double Gain(Element e) override {
    std::size_t fresh = 0;
    for (std::uint32_t id : rr_.sets_of_node[e]) fresh += !covered_[id];
    return Scale(count_ + fresh) - Scale(count_);
  }

  void Add(Element e) override {
    for (std::uint32_t id : rr_.sets_of_node[e]) {
      if (!covered_[id]) {
        covered_[id] = 1;
        ++count_;
      }
    }
  }

 private:
  double Scale(std::size_t count) const {
    return static_cast<double>(rr_.n) * static_cast<double>(count) /
           static_cast<double>(rr_.theta());
  }

  const RRSetCollection& rr_;
  std::vector<char> covered_;
  std::size_t count_ = 0;
};

RunTrace RunInner(PmInner inner, ValueOracle& oracle, const CostVector& cost,
                  double epsilon) {
  const SubmodularityRatio gamma(1.0);
  switch (inner) {
    case PmInner::kUp:
      return UpMaximize(oracle, cost, UpConfig(gamma, epsilon));
    case PmInner::kGammaRoi:
      return GammaRoi(oracle, cost, gamma);
    case PmInner::kThresholdRoi:
      return ThresholdRoi(oracle, cost, gamma, epsilon);
  }
  throw std::logic_error("unknown PM inner algorithm");
}

}  // namespace

RRSetCollection SampleRRSets(const Digraph& g, std::size_t theta,
                             std::uint64_t seed) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw std::invalid_argument("cannot sample RR sets on an empty graph");
  if (theta < 1) throw std::invalid_argument("theta must be at least 1");
  RRSetCollection rr;
  rr.n = n;
  rr.seed = seed;
  rr.sets.resize(theta);
  rr.sets_of_node.assign(n, {});
  Rng rng(seed);
  // visit_mark[v] == set id + 1 iff v was reached while building that set.
  std::vector<std::uint32_t> visit_mark(n, 0);
  std::vector<int> frontier;
  for (std::size_t s = 0; s < theta; ++s) {
    const auto mark = static_cast<std::uint32_t>(s + 1);
    const auto root = static_cast<int>(rng.Index(n));
    std::vector<int>& set = rr.sets[s];
    set.push_back(root);
    visit_mark[root] = mark;
    frontier.assign(1, root);
    while (!frontier.empty()) {
      const int v = frontier.back();
      frontier.pop_back();
      for (const Arc& arc : g.InArcs(v)) {
        if (visit_mark[arc.node] == mark) continue;
        if (!rng.Bernoulli(arc.p)) continue;
        visit_mark[arc.node] = mark;
        set.push_back(arc.node);
        frontier.push_back(arc.node);
      }
    }
    for (int v : set) rr.sets_of_node[v].push_back(static_cast<std::uint32_t>(s));
  }
  return rr;
}

double CoverageValue(const RRSetCollection& rr, std::span<const Element> set) {
  if (rr.theta() == 0) throw std::invalid_argument("RR collection is empty");
  std::vector<char> hit(rr.theta(), 0);
  std::size_t count = 0;
  for (Element e : set) {
    if (e < 0 || static_cast<std::size_t>(e) >= rr.n) {
      throw std::out_of_range("node id outside RR collection");
    }
    for (std::uint32_t id : rr.sets_of_node[e]) {
      if (!hit[id]) {
        hit[id] = 1;
        ++count;
      }
    }
  }
  return static_cast<double>(rr.n) * static_cast<double>(count) /
         static_cast<double>(rr.theta());
}

RRCoverageOracle::RRCoverageOracle(std::shared_ptr<const RRSetCollection> rr)
    : ValueOracle(rr ? rr->n : 0), rr_(std::move(rr)) {
  if (!rr_ || rr_->theta() == 0) {
    throw std::invalid_argument("RR coverage oracle needs a non-empty collection");
  }
}

double RRCoverageOracle::Compute(std::span<const Element> set) const {
  return CoverageValue(*rr_, set);
}

std::unique_ptr<OracleState> RRCoverageOracle::NewState() const {
  return std::make_unique<RRCoverageState>(*rr_);
}

CostVector DegreeCost(const Digraph& g, double lambda1, double lambda2) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0)) {
    throw std::invalid_argument("degree cost needs lambda1 > 0 and lambda2 > 0");
  }
  std::vector<double> costs(g.num_nodes());
  for (std::size_t v = 0; v < costs.size(); ++v) {
    const auto d = static_cast<double>(g.OutDegree(static_cast<int>(v)));
    costs[v] = d == 0.0 ? 1.0 : lambda1 * std::pow(d, lambda2);
  }
  return CostVector(std::move(costs));
}

std::optional<double> LargerRootEps1(double k) {
  if (!std::isfinite(k) || k <= 1.0) return std::nullopt;
  return (3.0 + std::sqrt(8.0 * k + 1.0)) / (2.0 * (k - 1.0));
}

std::optional<double> LargerRootEps2(double eps1, double k) {
  if (!std::isfinite(k) || k <= 0.0 || !(eps1 > -1.0)) return std::nullopt;
  return std::sqrt(2.0 * (eps1 + 1.0) / k);
}

const char* PmInnerName(PmInner inner) {
  switch (inner) {
    case PmInner::kUp:
      return "up";
    case PmInner::kGammaRoi:
      return "gamma-roi";
    case PmInner::kThresholdRoi:
      return "threshold-roi";
  }
  return "?";
}

PmInner ParsePmInner(const std::string& name) {
  if (name == "up") return PmInner::kUp;
  if (name == "gamma-roi") return PmInner::kGammaRoi;
  if (name == "threshold-roi") return PmInner::kThresholdRoi;
  throw std::invalid_argument("unknown PM inner algorithm '" + name + "'");
}

PmResult PmMaximize(const Digraph& g, const CostVector& cost,
                    const PmConfig& config) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw std::invalid_argument("PM needs a non-empty graph");
  if (cost.size() != n) throw std::invalid_argument("cost size does not match graph");
  const double eps = config.eps_prime;
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps_prime must be in (0, 1)");
  if (config.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  const auto nn = static_cast<double>(n);
  const double delta = config.delta > 0.0 ? config.delta : 1.0 / nn;
  const double inner_eps = config.inner_epsilon > 0.0 ? config.inner_epsilon : eps;

  PmResult result{ElementSet(n), {}, "max-iterations"};
  std::size_t theta = config.theta0 > 0 ? config.theta0 : n;
  // Guard inputs from the latest iteration; the first check uses eps1 = 0
  // and S = ∅, where f_R2(∅) - c(∅) = 0.
  double guard_eps1 = 0.0;
  double guard_profit = 0.0;
  const double guard_numerator = (8.0 + 2.0 * eps) * nn *
                                 (std::log(6.0 / delta) + nn * std::log(2.0)) /
                                 (eps * eps);

  for (int i = 1; i <= config.max_iterations; ++i) {
    const double limit =
        guard_numerator * (1.0 + guard_eps1) / std::max(1.0, guard_profit);
    if (static_cast<double>(theta) > limit) {
      result.stop_reason = "budget";
      break;
    }
    PmIteration it;
    it.index = i;
    it.theta = theta;
    auto r1 = std::make_shared<const RRSetCollection>(
        SampleRRSets(g, theta, DeriveSeed(config.seed, {static_cast<std::uint64_t>(i), 1})));
    auto r2 = std::make_shared<const RRSetCollection>(
        SampleRRSets(g, theta, DeriveSeed(config.seed, {static_cast<std::uint64_t>(i), 2})));
    RRCoverageOracle oracle(r1);
    const RunTrace trace = RunInner(config.inner, oracle, cost, inner_eps);
    it.oracle_calls = trace.oracle_calls;
    it.solution = trace.best;
    result.solution = ElementSet(n, trace.best);

    it.f_r1 = CoverageValue(*r1, trace.best);
    it.f_r2 = CoverageValue(*r2, trace.best);
    it.cost = cost.Cost(trace.best);
    const double log_term = std::log(6.0 * i * i / delta);
    const double scale = static_cast<double>(theta) / (nn * log_term);

    const double denom = it.f_r2 - it.cost;
    if (denom > 0.0) {
      it.t = (it.f_r1 - it.cost) / denom;
    } else {
      it.failed = true;
      it.note = "f_R2(S) - c(S) <= 0";
    }
    if (const auto root = LargerRootEps1(it.f_r2 * scale)) {
      it.eps1 = *root;
      guard_eps1 = it.eps1;
      if (const auto root2 =
              LargerRootEps2(it.eps1, (it.f_r2 - (1.0 + it.eps1) * it.cost) * scale)) {
        it.eps2 = *root2;
      } else if (!it.failed) {
        it.failed = true;
        it.note = "eps2 equation has no positive root";
      }
    } else if (!it.failed) {
      it.failed = true;
      it.note = "eps1 equation has no positive root";
    }
    guard_profit = it.f_r2 - (1.0 + guard_eps1) * it.cost;

    const bool converged = !it.failed && it.t > 0.0 && it.eps1 > 0.0 &&
                           it.eps2 > 0.0 &&
                           (it.t - 1.0) / it.t + it.eps1 + it.eps2 <= eps &&
                           it.eps1 + it.eps2 <= eps;
    result.iterations.push_back(std::move(it));
    if (converged) {
      result.stop_reason = "converged";
      break;
    }
    theta *= 2;
  }
  return result;
}

}  // namespace regmax
