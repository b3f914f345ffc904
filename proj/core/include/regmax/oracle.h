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

#ifndef REGMAX_ORACLE_H_
#define REGMAX_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "regmax/cost.h"
#include "regmax/element_set.h"

namespace regmax {

// Incremental evaluator for a growing set S, starting from S = ∅. States
// never touch the oracle's call counter; PartialSolution does the charging.
class OracleState {
 public:
  virtual ~OracleState() = default;

  // f(S).
  virtual double value() const = 0;
  // f(S ∪ {e}) - f(S). e must not be in S.
  virtual double Gain(Element e) = 0;
  // S <- S ∪ {e}.
  virtual void Add(Element e) = 0;
};

// Value oracle for a normalized monotone set function f over {0..n-1}.
//
// Subclasses implement Compute(). Value() is the counted entry point: every
// call charges exactly one oracle evaluation.
class ValueOracle {
 public:
  explicit ValueOracle(std::size_t n) : n_(n) {}
  virtual ~ValueOracle() = default;

  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;

  std::size_t size() const { return n_; }

  double Value(std::span<const Element> set) {
    ++calls_;
    return Compute(set);
  }
  double Value(const ElementSet& set) { return Value(set.members()); }

  // Uncounted evaluation, for ground-truth checks and for states.
  virtual double Compute(std::span<const Element> set) const = 0;

  // Uncounted incremental evaluator. The default re-evaluates f(S ∪ {e})
  // from scratch; oracles with cheap updates override it.
  virtual std::unique_ptr<OracleState> NewState() const;

  virtual std::string name() const { return "oracle"; }

  std::int64_t calls() const { return calls_; }
  void ResetCalls() { calls_ = 0; }
  void Charge(std::int64_t evaluations) { calls_ += evaluations; }

 private:
  std::size_t n_;
  std::int64_t calls_ = 0;
};

// Run-local partial solution with f(S) cached. Gain() costs one oracle call
// (only f(S ∪ {e}) is fresh). Add(e) is free when Gain(e) was queried
// against the current S, since f(S ∪ {e}) is then already known; otherwise
// it costs one call.
class PartialSolution {
 public:
  explicit PartialSolution(ValueOracle& oracle);

  double Gain(Element e);
  void Add(Element e);

  double value() const { return state_->value(); }
  const ElementSet& set() const { return set_; }
  bool Contains(Element e) const { return set_.Contains(e); }

 private:
  ValueOracle& oracle_;
  std::unique_ptr<OracleState> state_;
  ElementSet set_;
  // eval_stamp_[e] == stamp_ iff Gain(e) was queried against the current S.
  std::vector<std::uint32_t> eval_stamp_;
  std::uint32_t stamp_ = 1;
};

// f(S ∪ {e}) - f(S) via two fresh evaluations. Throws PreconditionError
// when e ∈ S.
double MarginalGain(ValueOracle& oracle, Element e, const ElementSet& set);

// MarginalGain / c(e).
double Density(ValueOracle& oracle, Element e, const ElementSet& set,
               const CostVector& cost);

// h(S) = f(S) - c(S); one oracle call.
double Objective(ValueOracle& oracle, const CostVector& cost,
                 const ElementSet& set);

}  // namespace regmax

#endif  // REGMAX_ORACLE_H_
