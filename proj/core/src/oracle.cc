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

#include "regmax/oracle.h"

#include <string>
#include <vector>

#include "regmax/errors.h"

namespace regmax {
namespace {

class RecomputeState : public OracleState {
 public:
  explicit RecomputeState(const ValueOracle& oracle) : oracle_(oracle) {}

  double value() const override { return value_; }

  double Gain(Element e) override {
    members_.push_back(e);
    const double next = oracle_.Compute(members_);
    members_.pop_back();
    last_element_ = e;
    last_value_ = next;
    return next - value_;
  }

  void Add(Element e) override {
    members_.push_back(e);
    value_ = (e == last_element_) ? last_value_ : oracle_.Compute(members_);
    last_element_ = -1;
  }

 private:
  const ValueOracle& oracle_;
  std::vector<Element> members_;
  double value_ = 0.0;
  Element last_element_ = -1;
  double last_value_ = 0.0;
};

}  // namespace

std::unique_ptr<OracleState> ValueOracle::NewState() const {
  return std::make_unique<RecomputeState>(*this);
}

PartialSolution::PartialSolution(ValueOracle& oracle)
    : oracle_(oracle),
      state_(oracle.NewState()),
      set_(oracle.size()),
      eval_stamp_(oracle.size(), 0) {}

double PartialSolution::Gain(Element e) {
  if (set_.Contains(e)) {
    throw PreconditionError("gain queried for element " + std::to_string(e) +
                            " already in the solution");
  }
  oracle_.Charge(1);
  eval_stamp_[e] = stamp_;
  return state_->Gain(e);
}

void PartialSolution::Add(Element e) {
  set_.Insert(e);
  if (eval_stamp_[e] != stamp_) oracle_.Charge(1);
  state_->Add(e);
  ++stamp_;
}

double MarginalGain(ValueOracle& oracle, Element e, const ElementSet& set) {
  if (set.Contains(e)) {
    throw PreconditionError("marginal gain requires e ∉ S (e=" +
                            std::to_string(e) + ")");
  }
  std::vector<Element> with = set.members();
  with.push_back(e);
  const double base = oracle.Value(set.members());
  return oracle.Value(with) - base;
}

double Density(ValueOracle& oracle, Element e, const ElementSet& set,
               const CostVector& cost) {
  return MarginalGain(oracle, e, set) / cost[e];
}

double Objective(ValueOracle& oracle, const CostVector& cost,
                 const ElementSet& set) {
  return oracle.Value(set) - cost.Cost(set);
}

}  // namespace regmax
