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

#ifndef REGMAX_COST_H_
#define REGMAX_COST_H_

#include <cstddef>
#include <span>
#include <vector>

#include "regmax/element_set.h"

namespace regmax {

// Modular cost c(S) = sum of c(e). Every c(e) must be finite and strictly
// positive; construction throws std::invalid_argument otherwise.
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(std::vector<double> costs);

  std::size_t size() const { return costs_.size(); }
  double operator[](Element e) const { return costs_[e]; }
  const std::vector<double>& values() const { return costs_; }

  double Cost(std::span<const Element> set) const;
  double Cost(const ElementSet& set) const { return Cost(set.members()); }

  // c_min / c_max; 0 for an empty ground set.
  double min() const { return min_; }
  double max() const { return max_; }

 private:
  std::vector<double> costs_;
  double min_ = 0.0;
  double max_ = 0.0;
};

// Submodularity ratio gamma in (0, 1].
class SubmodularityRatio {
 public:
  explicit SubmodularityRatio(double gamma);
  double value() const { return gamma_; }

 private:
  double gamma_;
};

}  // namespace regmax

#endif  // REGMAX_COST_H_
