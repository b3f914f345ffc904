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

#include "regmax/cost.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace regmax {

CostVector::CostVector(std::vector<double> costs) : costs_(std::move(costs)) {
  for (std::size_t i = 0; i < costs_.size(); ++i) {
    if (!std::isfinite(costs_[i]) || costs_[i] <= 0.0) {
      throw std::invalid_argument("cost of element " + std::to_string(i) +
                                  " must be positive and finite, got " +
                                  std::to_string(costs_[i]));
    }
  }
  if (!costs_.empty()) {
    auto [lo, hi] = std::minmax_element(costs_.begin(), costs_.end());
    min_ = *lo;
    max_ = *hi;
  }
}

double CostVector::Cost(std::span<const Element> set) const {
  double total = 0.0;
  for (Element e : set) total += costs_[e];
  return total;
}

SubmodularityRatio::SubmodularityRatio(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("submodularity ratio must lie in (0, 1], got " +
                                std::to_string(gamma));
  }
}

}  // namespace regmax
