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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "regmax/algorithms.h"
#include "regmax/errors.h"
#include "regmax/graph.h"
#include "regmax/ground_truth.h"
#include "regmax/vertex_cover.h"
#include "test_support.h"

namespace regmax {
namespace {

// Reference f: weight of S plus its out-neighbourhood, via a plain mark array.
double ReferenceCover(const CoverInstance& inst, const std::vector<Element>& set) {
  const auto edges = inst.graph.Edges();
  std::vector<char> covered(inst.graph.num_nodes(), 0);
  for (Element u : set) {
    covered[u] = 1;
    for (const auto& e : edges) {
      if (e.from == u) covered[e.to] = 1;
    }
  }
  double total = 0.0;
  for (std::size_t v = 0; v < covered.size(); ++v) {
    if (covered[v]) total += inst.weights[v];
  }
  return total;
}

TEST(VertexCoverTest, TriangleValues) {
  // a = 0, b = 1, c = 2 with a -> b and a -> c.
  const CoverInstance inst(Digraph(3, {{0, 1, 1.0}, {0, 2, 1.0}}), {}, 1);
  EXPECT_EQ(VcValue(inst, std::vector<Element>{}), 0.0);
  EXPECT_EQ(VcValue(inst, std::vector<Element>{0}), 3.0);
  EXPECT_EQ(VcValue(inst, std::vector<Element>{1}), 1.0);
  EXPECT_EQ(VcValue(inst, std::vector<Element>{0, 1, 2}), 3.0);
}

TEST(VertexCoverTest, FullSetCoversEverything) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CoverInstance inst(GenerateRandomDigraph(40, 100, seed), {}, 2);
    std::vector<Element> all(40);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(VcValue(inst, all), 40.0);
  }
}

TEST(VertexCoverTest, CostModel) {
  const Digraph g(3, {{0, 1, 1.0}, {0, 2, 1.0}});
  const auto q1 = VcCost(CoverInstance(g, {}, 1));
  EXPECT_EQ(q1[0], 2.0);  // 1 + max(2 - 1, 0)
  EXPECT_EQ(q1[1], 1.0);  // out-degree 0
  EXPECT_EQ(q1[2], 1.0);
  const auto q0 = VcCost(CoverInstance(g, {}, 0));
  EXPECT_EQ(q0[0], 3.0);
  const auto big = GenerateRandomDigraph(50, 300, 4);
  std::size_t max_degree = 0;
  for (int v = 0; v < 50; ++v) max_degree = std::max(max_degree, big.OutDegree(v));
  const auto flat = VcCost(CoverInstance(big, {}, static_cast<int>(max_degree)));
  for (double c : flat.values()) EXPECT_EQ(c, 1.0);
}

TEST(VertexCoverTest, RejectsBadInstances) {
  const Digraph g(2, {{0, 1, 1.0}});
  EXPECT_THROW(CoverInstance(g, {}, -1), std::invalid_argument);
  EXPECT_THROW(CoverInstance(g, {1.0}, 0), std::invalid_argument);
  EXPECT_THROW(CoverInstance(g, {1.0, -2.0}, 0), std::invalid_argument);
}

// Runs `trials` random (S, e) pairs through the incremental state and the
// direct sum; `tol` = 0 demands bit equality.
void CheckIncremental(const std::vector<double>& w, std::uint64_t seed, int trials,
                      double tol) {
  testing::SetSampler sampler(seed);
  auto inst = std::make_shared<const CoverInstance>(
      GenerateRandomDigraph(w.size(), 4 * w.size(), seed), w, 1);
  VertexCoverOracle oracle(inst);
  const std::size_t n = w.size();
  for (int trial = 0; trial < trials; ++trial) {
    const auto s = sampler.Subset(n, 0.3);
    const Element e = sampler.Outside(s, n);
    if (e < 0) continue;
    auto state = oracle.NewState();
    for (Element x : s) state->Add(x);
    const double direct = VcValue(*inst, s);
    auto with = s;
    with.push_back(e);
    const double direct_with = VcValue(*inst, with);
    const double gain = state->Gain(e);
    if (tol == 0.0) {
      ASSERT_EQ(state->value(), direct);
      ASSERT_EQ(gain, direct_with - direct);
    } else {
      ASSERT_NEAR(state->value(), direct, tol * std::max(1.0, direct));
      ASSERT_NEAR(gain, direct_with - direct, tol * std::max(1.0, direct_with));
    }
    state->Add(e);
    ASSERT_EQ(state->value(), direct_with);
  }
}

TEST(VertexCoverTest, IncrementalAgreesExactlyWithDirect) {
  // Integer weights keep every partial sum exact, so any mismatch is a
  // bookkeeping error rather than rounding.
  testing::SetSampler sampler(11);
  std::uniform_int_distribution<int> weight(0, 5);
  std::vector<double> w(30);
  for (double& x : w) x = weight(sampler.engine());
  CheckIncremental(w, 5, 10000, 0.0);
  CheckIncremental(std::vector<double>(30, 1.0), 6, 10000, 0.0);
}

TEST(VertexCoverTest, IncrementalAgreesWithRealWeights) {
  // Real weights are summed in a different order by the gain, so agreement
  // is up to rounding.
  testing::SetSampler sampler(12);
  std::uniform_real_distribution<double> weight(0.0, 3.0);
  std::vector<double> w(30);
  for (double& x : w) x = weight(sampler.engine());
  CheckIncremental(w, 7, 10000, 1e-12);
}

TEST(VertexCoverTest, MatchesReferenceOnRandomSets) {
  testing::SetSampler sampler(12);
  const CoverInstance inst(GenerateRandomDigraph(25, 70, 6), {}, 1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = sampler.Subset(25, 0.25);
    EXPECT_DOUBLE_EQ(VcValue(inst, s), ReferenceCover(inst, s));
  }
}

TEST(VertexCoverTest, SubmodularityRatioIsOne) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    VertexCoverOracle oracle(std::make_shared<const CoverInstance>(
        GenerateRandomDigraph(10, 25, seed), std::vector<double>{}, 1));
    EXPECT_NEAR(EmpiricalSubmodularityRatio(oracle), 1.0, 1e-12);
  }
}

TEST(VertexCoverTest, OptimumNonDecreasingInPenalty) {
  // Raising q only lowers costs, so brute-force OPT cannot drop.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = GenerateRandomDigraph(12, 40, seed);
    double previous = -1.0;
    for (int q = 0; q <= 6; ++q) {
      auto inst = std::make_shared<const CoverInstance>(g, std::vector<double>{}, q);
      VertexCoverOracle oracle(inst);
      const double opt = BruteForceOpt(oracle, VcCost(*inst)).value;
      EXPECT_GE(opt, previous);
      previous = opt;
    }
  }
}

TEST(VertexCoverTest, WeightsFile) {
  const auto path = (std::filesystem::temp_directory_path() / "regmax_vc_weights.txt").string();
  std::ofstream(path) << "# node weight\n0 2.5\n2 0\n";
  const auto w = LoadNodeWeights(path, 4);
  EXPECT_EQ(w, (std::vector<double>{2.5, 1.0, 0.0, 1.0}));
  std::ofstream(path) << "7 1\n";
  EXPECT_THROW(LoadNodeWeights(path, 4), ParseError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace regmax
