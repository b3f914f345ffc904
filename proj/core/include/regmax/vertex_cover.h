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

#ifndef REGMAX_VERTEX_COVER_H_
#define REGMAX_VERTEX_COVER_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "regmax/cost.h"
#include "regmax/graph.h"
#include "regmax/oracle.h"

namespace regmax {

// Weighted directed vertex cover: f(S) is the weight of S together with its
// out-neighbours. Monotone and submodular.
struct CoverInstance {
  // Unit weights when `weights` is empty. Throws std::invalid_argument on a
  // size mismatch or a negative weight.
  CoverInstance(Digraph graph, std::vector<double> weights, int q);

  Digraph graph;
  std::vector<double> weights;
  int q = 0;  // cost penalty
};

// Sum of w(u) over S ∪ N(S).
double VcValue(const CoverInstance& inst, std::span<const Element> set);

// c(v) = 1 + max(d(v) - q, 0) with d the out-degree.
CostVector VcCost(const CoverInstance& inst);

class VertexCoverOracle : public ValueOracle {
 public:
  explicit VertexCoverOracle(std::shared_ptr<const CoverInstance> inst);

  double Compute(std::span<const Element> set) const override;
  std::unique_ptr<OracleState> NewState() const override;
  std::string name() const override { return "vertex-cover"; }

  const CoverInstance& instance() const { return *inst_; }

 private:
  std::shared_ptr<const CoverInstance> inst_;
};

}  // namespace regmax

#endif  // REGMAX_VERTEX_COVER_H_
