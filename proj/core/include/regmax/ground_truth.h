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

#ifndef REGMAX_GROUND_TRUTH_H_
#define REGMAX_GROUND_TRUTH_H_

#include <cstddef>

#include "regmax/cost.h"
#include "regmax/element_set.h"
#include "regmax/oracle.h"

namespace regmax {

inline constexpr std::size_t kBruteForceCap = 20;
inline constexpr std::size_t kRatioCap = 12;

struct OptResult {
  ElementSet set;
  double value = 0.0;  // f(OPT) - c(OPT)
  double utility = 0.0;  // f(OPT)
  double cost = 0.0;     // c(OPT)
};

// argmax_T f(T) - c(T) over all 2^n subsets. Ties go to the
// lexicographically smallest ascending member list, so ∅ wins any tie at 0.
// Throws CapExceededError when n > cap. Charges 2^n oracle calls.
OptResult BruteForceOpt(ValueOracle& oracle, const CostVector& cost,
                        std::size_t cap = kBruteForceCap);

// min over S ⊆ T with f(T) > f(S) of sum_{u in T\S} f(u|S) / (f(T) - f(S)),
// clamped to at most 1. Returns 1 when no pair has f(T) > f(S).
// Throws CapExceededError when n > cap. Charges 2^n oracle calls.
double EmpiricalSubmodularityRatio(ValueOracle& oracle,
                                   std::size_t cap = kRatioCap);

}  // namespace regmax

#endif  // REGMAX_GROUND_TRUTH_H_
