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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "regmax/errors.h"
#include "regmax/graph.h"
#include "regmax/ground_truth.h"
#include "regmax/influence.h"
#include "test_support.h"

namespace regmax {
namespace {

std::vector<Element> AllNodes(std::size_t n) {
  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

// Collection with hand-chosen sets, built the way the sampler fills it.
RRSetCollection HandCollection(std::size_t n, std::vector<std::vector<int>> sets) {
  RRSetCollection rr;
  rr.n = n;
  rr.sets = std::move(sets);
  rr.sets_of_node.resize(n);
  for (std::size_t s = 0; s < rr.sets.size(); ++s) {
    for (int v : rr.sets[s]) rr.sets_of_node[v].push_back(static_cast<std::uint32_t>(s));
  }
  return rr;
}

TEST(SampleRRSetsTest, ZeroProbabilityGivesSingletons) {
  const Digraph g(4, {{0, 1, 0.0}, {1, 2, 0.0}, {2, 3, 0.0}, {3, 0, 0.0}});
  const auto rr = SampleRRSets(g, 500, 1);
  for (const auto& set : rr.sets) EXPECT_EQ(set.size(), 1u);
}

TEST(SampleRRSetsTest, UnitProbabilityGivesReverseClosure) {
  // 0 -> 1 -> 2, 3 isolated: closures are {0}, {0,1}, {0,1,2}, {3}.
  const Digraph g(4, {{0, 1, 1.0}, {1, 2, 1.0}});
  const auto rr = SampleRRSets(g, 400, 2);
  for (const auto& set : rr.sets) {
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    const int root = set.front();
    if (root == 3) {
      EXPECT_EQ(sorted, (std::vector<int>{3}));
    } else {
      std::vector<int> closure(root + 1);
      std::iota(closure.begin(), closure.end(), 0);
      EXPECT_EQ(sorted, closure);
    }
  }
}

TEST(SampleRRSetsTest, HalfProbabilityEdgeFrequency) {
  const Digraph g(2, {{0, 1, 0.5}});
  const auto rr = SampleRRSets(g, 10000, 3);
  int rooted = 0;
  int with_source = 0;
  for (const auto& set : rr.sets) {
    if (set.front() != 1) continue;
    ++rooted;
    with_source += std::count(set.begin(), set.end(), 0) > 0;
  }
  ASSERT_GT(rooted, 0);
  EXPECT_NEAR(static_cast<double>(with_source) / rooted, 0.5, 0.02);
}

TEST(SampleRRSetsTest, Refusals) {
  EXPECT_THROW(SampleRRSets(Digraph(0, {}), 10, 1), std::invalid_argument);
  EXPECT_THROW(SampleRRSets(Digraph(2, {}), 0, 1), std::invalid_argument);
}

TEST(SampleRRSetsTest, SeedDeterminism) {
  const auto g = GenerateRandomDigraph(50, 200, 9);
  const auto a = SampleRRSets(g, 300, 77);
  const auto b = SampleRRSets(g, 300, 77);
  const auto c = SampleRRSets(g, 300, 78);
  EXPECT_EQ(a.sets, b.sets);
  EXPECT_NE(a.sets, c.sets);
}

TEST(CoverageValueTest, HandCollection) {
  const auto rr = HandCollection(5, {{1}, {1, 2}, {3}, {2}});
  EXPECT_DOUBLE_EQ(CoverageValue(rr, std::vector<Element>{1}), 2.5);
  EXPECT_DOUBLE_EQ(CoverageValue(rr, std::vector<Element>{}), 0.0);
  EXPECT_DOUBLE_EQ(CoverageValue(rr, AllNodes(5)), 5.0);
  EXPECT_THROW(CoverageValue(HandCollection(3, {}), std::vector<Element>{}),
               std::invalid_argument);
}

TEST(CoverageValueTest, RangeAndExtremesOnSampledCollections) {
  testing::SetSampler sampler(5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = GenerateRandomDigraph(40, 120, seed);
    auto rr = std::make_shared<const RRSetCollection>(SampleRRSets(g, 200, seed));
    EXPECT_EQ(CoverageValue(*rr, std::vector<Element>{}), 0.0);
    EXPECT_EQ(CoverageValue(*rr, AllNodes(40)), 40.0);
    RRCoverageOracle oracle(rr);
    for (int k = 0; k < 50; ++k) {
      const auto s = sampler.Subset(40, 0.2);
      const double v = oracle.Compute(s);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 40.0);
      // The incremental state is bit-exact against the direct count.
      auto state = oracle.NewState();
      for (Element e : s) state->Add(e);
      EXPECT_EQ(state->value(), v);
      const Element e = sampler.Outside(s, 40);
      if (e >= 0) {
        auto with = s;
        with.push_back(e);
        EXPECT_EQ(state->Gain(e), oracle.Compute(with) - v);
      }
    }
  }
}

TEST(CoverageValueTest, SubmodularOnSmallCollections) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = GenerateRandomDigraph(8, 16, seed);
    RRCoverageOracle oracle(std::make_shared<const RRSetCollection>(SampleRRSets(g, 60, seed)));
    EXPECT_NEAR(EmpiricalSubmodularityRatio(oracle), 1.0, 1e-12);
  }
}

TEST(CoverageValueTest, UnbiasedAgainstLiveEdgeEnumeration) {
  const Digraph g(5, {{0, 1, 0.6}, {0, 2, 0.3}, {1, 2, 0.5}, {1, 3, 0.7},
                      {2, 4, 0.4}, {3, 4, 0.8}, {4, 0, 0.2}, {3, 1, 0.1}});
  for (int v = 0; v < 5; ++v) {
    std::vector<double> samples;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto rr = SampleRRSets(g, 2000, 1000 + seed);
      samples.push_back(CoverageValue(rr, std::vector<Element>{v}));
    }
    const double se = testing::SampleStd(samples) / std::sqrt(50.0);
    EXPECT_LE(std::abs(testing::Mean(samples) - testing::ExactSpread(g, v)), 3.0 * se)
        << "node " << v;
  }
}

TEST(DegreeCostTest, Values) {
  // Out-degrees: 0 -> 2, 1 -> 1, 2 -> 0.
  const Digraph g(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
  const auto cost = DegreeCost(g, 1.5, 2.0);
  EXPECT_DOUBLE_EQ(cost[0], 1.5 * 4.0);
  EXPECT_DOUBLE_EQ(cost[1], 1.5);
  EXPECT_DOUBLE_EQ(cost[2], 1.0);
  EXPECT_THROW(DegreeCost(g, 0.0, 1.0), std::invalid_argument);
}

TEST(PmQuadraticTest, LargerRoots) {
  // eps^2 - 3 eps - 2 = 0 has larger root (3 + sqrt 17) / 2.
  ASSERT_TRUE(LargerRootEps1(2.0).has_value());
  EXPECT_NEAR(*LargerRootEps1(2.0), (3.0 + std::sqrt(17.0)) / 2.0, 1e-12);
  EXPECT_NEAR(*LargerRootEps1(2.0), 3.5616, 1e-4);
  const double e = *LargerRootEps1(2.0);
  EXPECT_NEAR((e + 1.0) * (e + 2.0) / (e * e), 2.0, 1e-12);
  EXPECT_LT(*LargerRootEps1(1e12), 1e-5);
  EXPECT_GT(*LargerRootEps1(1e12), 0.0);
  EXPECT_FALSE(LargerRootEps1(1.0).has_value());
  EXPECT_FALSE(LargerRootEps1(0.5).has_value());
  // eps2^2 = 2 (eps1 + 1) / K.
  EXPECT_NEAR(*LargerRootEps2(1.0, 4.0), 1.0, 1e-12);
  EXPECT_FALSE(LargerRootEps2(0.1, -1.0).has_value());
}

TEST(PmMaximizeTest, HundredNodeGraphTerminates) {
  const auto g = GenerateRandomDigraph(100, 400, 21);
  const auto cost = DegreeCost(g, 0.5, 1.0);
  PmConfig cfg;
  cfg.eps_prime = 0.2;
  cfg.seed = 4;
  const auto result = PmMaximize(g, cost, cfg);
  ASSERT_FALSE(result.iterations.empty());
  EXPECT_NE(result.stop_reason, "max-iterations");
  EXPECT_EQ(result.iterations.front().theta, 100u);
  for (std::size_t i = 1; i < result.iterations.size(); ++i) {
    EXPECT_EQ(result.iterations[i].theta, 2 * result.iterations[i - 1].theta);
  }
  const auto& last = result.iterations.back();
  EXPECT_EQ(result.solution.members(), ElementSet(100, last.solution).members());
  EXPECT_GE(last.f_r2 - last.cost, 0.0);
  if (result.stop_reason == "converged") {
    EXPECT_LE((last.t - 1.0) / last.t + last.eps1 + last.eps2, 0.2);
  }
}

TEST(PmMaximizeTest, DeterministicAndValidated) {
  const auto g = GenerateRandomDigraph(60, 240, 3);
  const auto cost = DegreeCost(g, 1.0, 1.0);
  PmConfig cfg;
  cfg.seed = 8;
  cfg.inner = PmInner::kThresholdRoi;
  const auto a = PmMaximize(g, cost, cfg);
  const auto b = PmMaximize(g, cost, cfg);
  ASSERT_EQ(a.iterations.size(), b.iterations.size());
  EXPECT_EQ(a.solution.members(), b.solution.members());
  for (std::size_t i = 0; i < a.iterations.size(); ++i) {
    EXPECT_EQ(a.iterations[i].f_r1, b.iterations[i].f_r1);
    EXPECT_EQ(a.iterations[i].t, b.iterations[i].t);
  }
  cfg.eps_prime = 1.0;
  EXPECT_THROW(PmMaximize(g, cost, cfg), std::invalid_argument);
  EXPECT_EQ(ParsePmInner("gamma-roi"), PmInner::kGammaRoi);
  EXPECT_STREQ(PmInnerName(PmInner::kUp), "up");
  EXPECT_THROW(ParsePmInner("bogus"), std::invalid_argument);
}

class EdgeListTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("regmax_edges_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& body) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << body;
    return path;
  }

  std::filesystem::path dir_;
};

TEST_F(EdgeListTest, SnapStyleFile) {
  // Same shape as a peer-to-peer SNAP dump: 6301 nodes, 20777 edges.
  const auto g = GenerateRandomDigraph(6301, 20777, 12);
  std::ostringstream body;
  body << "# Directed graph (each unordered pair of nodes is saved once)\n"
       << "# Nodes: 6301 Edges: 20777\n# FromNodeId\tToNodeId\n";
  for (const auto& e : g.Edges()) body << e.from << '\t' << e.to << '\n';
  const auto loaded = LoadEdgeList(Write("snap.txt", body.str()));
  EXPECT_EQ(loaded.num_nodes(), 6301u);
  EXPECT_EQ(loaded.num_edges(), 20777u);
  // Missing probabilities fall back to 1 / in-degree.
  for (int v = 0; v < 50; ++v) {
    for (const auto& arc : loaded.InArcs(v)) {
      EXPECT_DOUBLE_EQ(arc.p, 1.0 / static_cast<double>(loaded.InDegree(v)));
    }
  }
}

TEST_F(EdgeListTest, HeaderAndExplicitProbabilities) {
  const auto g = LoadEdgeList(Write("g.txt", "n 5\n0 1 0.25\n1 2  # trailing comment\n"));
  EXPECT_EQ(g.num_nodes(), 5u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_DOUBLE_EQ(g.OutArcs(0)[0].p, 0.25);
  EXPECT_DOUBLE_EQ(g.OutArcs(1)[0].p, 1.0);
}

TEST_F(EdgeListTest, RoundTripThroughWriter) {
  const auto g = GenerateRandomDigraph(30, 90, 2);
  std::ostringstream out;
  WriteEdgeList(out, g, true);
  const auto back = LoadEdgeList(Write("rt.txt", out.str()));
  ASSERT_EQ(back.num_edges(), g.num_edges());
  const auto a = g.Edges();
  const auto b = back.Edges();
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].from, b[i].from);
    EXPECT_EQ(a[i].to, b[i].to);
    EXPECT_EQ(a[i].p, b[i].p);
  }
}

TEST_F(EdgeListTest, MalformedLineReportsLineNumber) {
  const auto path = Write("bad.txt", "0 1\n1 2\n2 x\n");
  try {
    LoadEdgeList(path);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.file(), path);
  }
  EXPECT_THROW(LoadEdgeList(Write("p.txt", "0 1 1.5\n")), ParseError);
}

TEST_F(EdgeListTest, EdgeCountMismatchAndEmptyFile) {
  EXPECT_THROW(LoadEdgeList(Write("m.txt", "# Nodes: 3 Edges: 5\n0 1\n1 2\n")), ParseError);
  EXPECT_THROW(LoadEdgeList(Write("e.txt", "# nothing here\n")), ParseError);
  EXPECT_THROW(LoadEdgeList((dir_ / "missing.txt").string()), ParseError);
}

}  // namespace
}  // namespace regmax
