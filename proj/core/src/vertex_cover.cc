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

#include "regmax/vertex_cover.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace regmax {
namespace {

// Sums covered weights in node order, so incremental and fresh evaluation
// agree bit-for-bit.
double SumCovered(const std::vector<double>& weights,
                  const std::vector<char>& covered) {
  double total = 0.0;
  for (std::size_t v = 0; v < covered.size(); ++v) {
    if (covered[v]) total += weights[v];
  }
  return total;
}

void MarkClosedNeighbourhood(const Digraph& g, Element u,
                             std::vector<char>& covered) {
  covered[u] = 1;
  for (const Arc& arc : g.OutArcs(u)) covered[arc.node] = 1;
}

class CoverState : public OracleState {
 public:
  explicit CoverState(const CoverInstance& inst)
      : inst_(inst),
        covered_(inst.graph.num_nodes(), 0),
        seen_(inst.graph.num_nodes(), 0) {}

  double value() const override { return value_; }

  double Gain(Element e) override {
    // Parallel edges may list a neighbour twice; count it once.
    ++stamp_;
    double gain = 0.0;
    auto visit = [&](int v) {
      if (covered_[v] || seen_[v] == stamp_) return;
      seen_[v] = stamp_;
      gain += inst_.weights[v];
    };
    visit(e);
    for (const Arc& arc : inst_.graph.OutArcs(e)) visit(arc.node);
    return gain;
  }

  void Add(Element e) override {
    MarkClosedNeighbourhood(inst_.graph, e, covered_);
    value_ = SumCovered(inst_.weights, covered_);
  }

 private:
  const CoverInstance& inst_;
  std::vector<char> covered_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
  double value_ = 0.0;
};

}  // namespace

CoverInstance::CoverInstance(Digraph g, std::vector<double> w, int penalty)
    : graph(std::move(g)), weights(std::move(w)), q(penalty) {
  if (weights.empty()) weights.assign(graph.num_nodes(), 1.0);
  if (weights.size() != graph.num_nodes()) {
    throw std::invalid_argument("node weight count does not match graph");
  }
  for (double x : weights) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument("node weights must be finite and >= 0");
    }
  }
  if (q < 0) throw std::invalid_argument("cost penalty q must be >= 0");
}

double VcValue(const CoverInstance& inst, std::span<const Element> set) {
  std::vector<char> covered(inst.graph.num_nodes(), 0);
  for (Element u : set) {
    if (u < 0 || static_cast<std::size_t>(u) >= covered.size()) {
      throw std::out_of_range("node id outside graph");
    }
    MarkClosedNeighbourhood(inst.graph, u, covered);
  }
  return SumCovered(inst.weights, covered);
}

CostVector VcCost(const CoverInstance& inst) {
  std::vector<double> costs(inst.graph.num_nodes());
  for (std::size_t v = 0; v < costs.size(); ++v) {
    const auto d = static_cast<long long>(inst.graph.OutDegree(static_cast<int>(v)));
    costs[v] = 1.0 + static_cast<double>(std::max<long long>(d - inst.q, 0));
  }
  return CostVector(std::move(costs));
}

VertexCoverOracle::VertexCoverOracle(std::shared_ptr<const CoverInstance> inst)
    : ValueOracle(inst ? inst->graph.num_nodes() : 0), inst_(std::move(inst)) {
  if (!inst_) throw std::invalid_argument("null cover instance");
}

double VertexCoverOracle::Compute(std::span<const Element> set) const {
  return VcValue(*inst_, set);
}

std::unique_ptr<OracleState> VertexCoverOracle::NewState() const {
  return std::make_unique<CoverState>(*inst_);
}

}  // namespace regmax
