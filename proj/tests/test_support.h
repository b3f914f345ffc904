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

// Independent reference implementations used as test oracles. They share no
// code paths with the library beyond ValueOracle::Compute and the instance
// types, and favour obviously-correct loops over speed.

#ifndef REGMAX_TESTS_TEST_SUPPORT_H_
#define REGMAX_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "regmax/cost.h"
#include "regmax/element_set.h"
#include "regmax/graph.h"
#include "regmax/oracle.h"

namespace regmax::testing {

inline std::vector<Element> Members(std::uint64_t mask, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1u) out.push_back(static_cast<Element>(i));
  }
  return out;
}

inline std::uint64_t MaskOf(std::span<const Element> set) {
  std::uint64_t mask = 0;
  for (Element e : set) mask |= std::uint64_t{1} << e;
  return mask;
}

// f given explicitly on every subset, indexed by bitmask.
class TableOracle : public ValueOracle {
 public:
  TableOracle(std::size_t n, std::vector<double> by_mask)
      : ValueOracle(n), table_(std::move(by_mask)) {}
  double Compute(std::span<const Element> set) const override {
    return table_[MaskOf(set)];
  }

 private:
  std::vector<double> table_;
};

// f(S) = sum of w(e).
class ModularOracle : public ValueOracle {
 public:
  explicit ModularOracle(std::vector<double> w)
      : ValueOracle(w.size()), w_(std::move(w)) {}
  double Compute(std::span<const Element> set) const override {
    double total = 0.0;
    for (Element e : set) total += w_[e];
    return total;
  }

 private:
  std::vector<double> w_;
};

struct ReferenceOptResult {
  double value = 0.0;
  double utility = 0.0;
  double cost = 0.0;
};

// max over all masks of f - c, by direct enumeration.
inline ReferenceOptResult ReferenceOpt(const ValueOracle& oracle,
                                       const CostVector& cost) {
  const std::size_t n = oracle.size();
  ReferenceOptResult best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto set = Members(mask, n);
    const double f = oracle.Compute(set);
    double c = 0.0;
    for (Element e : set) c += cost[e];
    if (f - c > best.value) best = {f - c, f, c};
  }
  return best;
}

// Submodularity ratio straight from its definition: min over S ⊆ T with
// f(T) > f(S) of sum_{u in T\S} (f(S+u) - f(S)) / (f(T) - f(S)), capped at 1.
inline double ReferenceRatio(const ValueOracle& oracle) {
  const std::size_t n = oracle.size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  double ratio = 1.0;
  for (std::uint64_t s = 0; s <= full; ++s) {
    const auto sset = Members(s, n);
    const double fs = oracle.Compute(sset);
    for (std::uint64_t t = 0; t <= full; ++t) {
      if ((t & s) != s || t == s) continue;
      const double joint = oracle.Compute(Members(t, n)) - fs;
      if (!(joint > 0.0)) continue;
      double singles = 0.0;
      for (Element u : Members(t & ~s, n)) {
        auto with = sset;
        with.push_back(u);
        singles += oracle.Compute(with) - fs;
      }
      ratio = std::min(ratio, singles / joint);
    }
  }
  return ratio;
}

// Expected influence spread of {v} under the independent-cascade model, by
// enumerating all 2^m live-edge realizations.
inline double ExactSpread(const Digraph& g, int v) {
  const auto edges = g.Edges();
  const std::size_t m = edges.size();
  const std::size_t n = g.num_nodes();
  double expected = 0.0;
  for (std::uint64_t live = 0; live < (std::uint64_t{1} << m); ++live) {
    double prob = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
      prob *= (live >> k & 1u) ? edges[k].p : 1.0 - edges[k].p;
    }
    if (prob == 0.0) continue;
    std::vector<char> reached(n, 0);
    reached[v] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t k = 0; k < m; ++k) {
        if ((live >> k & 1u) && reached[edges[k].from] && !reached[edges[k].to]) {
          reached[edges[k].to] = 1;
          grew = true;
        }
      }
    }
    expected += prob * static_cast<double>(std::count(reached.begin(), reached.end(), 1));
  }
  return expected;
}

inline double Mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double SampleStd(const std::vector<double>& v) {
  const double m = Mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

// Seeded generator of random subsets, for property tests.
class SetSampler {
 public:
  explicit SetSampler(std::uint64_t seed) : rng_(seed) {}

  std::vector<Element> Subset(std::size_t n, double p = 0.5) {
    std::vector<Element> out;
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng_)) out.push_back(static_cast<Element>(i));
    }
    std::shuffle(out.begin(), out.end(), rng_);
    return out;
  }

  Element Outside(std::span<const Element> set, std::size_t n) {
    std::vector<Element> free;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::find(set.begin(), set.end(), static_cast<Element>(i)) == set.end()) {
        free.push_back(static_cast<Element>(i));
      }
    }
    if (free.empty()) return -1;
    return free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng_)];
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace regmax::testing

#endif  // REGMAX_TESTS_TEST_SUPPORT_H_
