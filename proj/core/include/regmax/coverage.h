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

#ifndef REGMAX_COVERAGE_H_
#define REGMAX_COVERAGE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "regmax/cost.h"
#include "regmax/oracle.h"

namespace regmax {

// Weighted coverage f(S) = total weight of items covered by S. Monotone and
// submodular.
class WeightedCoverageOracle : public ValueOracle {
 public:
  WeightedCoverageOracle(std::vector<std::vector<int>> covers,
                         std::vector<double> item_weights);

  double Compute(std::span<const Element> set) const override;
  std::unique_ptr<OracleState> NewState() const override;
  std::string name() const override { return "weighted-coverage"; }

  const std::vector<std::vector<int>>& covers() const { return covers_; }
  const std::vector<double>& item_weights() const { return weights_; }

 private:
  std::vector<std::vector<int>> covers_;
  std::vector<double> weights_;
};

struct CoverageSpec {
  std::size_t elements = 12;
  std::size_t items = 30;
  // Probability that an element covers a given item.
  double density = 0.2;
  double weight_lo = 0.0;
  double weight_hi = 1.0;
  double cost_lo = 0.1;
  double cost_hi = 2.0;
};

struct CoverageInstance {
  std::vector<std::vector<int>> covers;
  std::vector<double> item_weights;
  std::vector<double> costs;

  std::unique_ptr<WeightedCoverageOracle> MakeOracle() const {
    return std::make_unique<WeightedCoverageOracle>(covers, item_weights);
  }
  CostVector MakeCost() const { return CostVector(costs); }
};

// Seeded random instance. Every element covers at least one item.
CoverageInstance GenerateCoverage(const CoverageSpec& spec, std::uint64_t seed);

// JSON object {"covers": [[item...]...], "item_weights": [...], "costs": [...]}.
std::string CoverageToJson(const CoverageInstance& inst);
// Throws ParseError (naming `source`) on malformed or inconsistent input.
CoverageInstance CoverageFromJson(const std::string& text, const std::string& source);
CoverageInstance LoadCoverage(const std::string& path);

}  // namespace regmax

#endif  // REGMAX_COVERAGE_H_
