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

#include "regmax/coverage.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "regmax/errors.h"
#include "regmax/random.h"

namespace regmax {
namespace {

class CoverageState : public OracleState {
 public:
  explicit CoverageState(const WeightedCoverageOracle& oracle)
      : oracle_(oracle), covered_(oracle.item_weights().size(), 0) {}

  double value() const override { return value_; }

  double Gain(Element e) override {
    double gain = 0.0;
    for (int item : oracle_.covers()[e]) {
      if (!covered_[item]) gain += oracle_.item_weights()[item];
    }
    return gain;
  }

  void Add(Element e) override {
    // Re-sum in item order so the cached value matches Compute() bit-for-bit.
    for (int item : oracle_.covers()[e]) covered_[item] = 1;
    value_ = 0.0;
    for (std::size_t i = 0; i < covered_.size(); ++i) {
      if (covered_[i]) value_ += oracle_.item_weights()[i];
    }
  }

 private:
  const WeightedCoverageOracle& oracle_;
  std::vector<char> covered_;
  double value_ = 0.0;
};

}  // namespace

WeightedCoverageOracle::WeightedCoverageOracle(
    std::vector<std::vector<int>> covers, std::vector<double> item_weights)
    : ValueOracle(covers.size()),
      covers_(std::move(covers)),
      weights_(std::move(item_weights)) {
  for (const auto& list : covers_) {
    for (int item : list) {
      if (item < 0 || static_cast<std::size_t>(item) >= weights_.size()) {
        throw std::invalid_argument("coverage item id out of range");
      }
    }
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("item weights must be >= 0");
  }
}

double WeightedCoverageOracle::Compute(std::span<const Element> set) const {
  std::vector<char> covered(weights_.size(), 0);
  for (Element e : set) {
    for (int item : covers_[e]) covered[item] = 1;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (covered[i]) total += weights_[i];
  }
  return total;
}

std::unique_ptr<OracleState> WeightedCoverageOracle::NewState() const {
  return std::make_unique<CoverageState>(*this);
}

CoverageInstance GenerateCoverage(const CoverageSpec& spec,
                                  std::uint64_t seed) {
  if (spec.items == 0 && spec.elements > 0) {
    throw std::invalid_argument("coverage instance needs at least one item");
  }
  Rng rng(seed);
  CoverageInstance inst;
  inst.item_weights.resize(spec.items);
  for (double& w : inst.item_weights) {
    w = rng.Uniform(spec.weight_lo, spec.weight_hi);
  }
  inst.covers.resize(spec.elements);
  for (auto& list : inst.covers) {
    for (std::size_t item = 0; item < spec.items; ++item) {
      if (rng.Bernoulli(spec.density)) list.push_back(static_cast<int>(item));
    }
    if (list.empty()) list.push_back(static_cast<int>(rng.Index(spec.items)));
  }
  inst.costs.resize(spec.elements);
  for (double& c : inst.costs) c = rng.Uniform(spec.cost_lo, spec.cost_hi);
  return inst;
}

std::string CoverageToJson(const CoverageInstance& inst) {
  nlohmann::json j;
  j["covers"] = inst.covers;
  j["item_weights"] = inst.item_weights;
  j["costs"] = inst.costs;
  return j.dump(2);
}

CoverageInstance CoverageFromJson(const std::string& text, const std::string& source) {
  CoverageInstance inst;
  try {
    const auto j = nlohmann::json::parse(text);
    inst.covers = j.at("covers").get<std::vector<std::vector<int>>>();
    inst.item_weights = j.at("item_weights").get<std::vector<double>>();
    inst.costs = j.at("costs").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, 0, std::string("malformed coverage instance: ") + e.what());
  }
  if (inst.covers.empty()) throw ParseError(source, 0, "empty instance");
  if (inst.costs.size() != inst.covers.size()) {
    throw ParseError(source, 0, "costs and covers have different lengths");
  }
  try {
    inst.MakeOracle();
    inst.MakeCost();
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 0, e.what());
  }
  return inst;
}

CoverageInstance LoadCoverage(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return CoverageFromJson(buffer.str(), path);
}

}  // namespace regmax
