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

#include "regmax/ground_truth.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "regmax/errors.h"

namespace regmax {
namespace {

std::vector<double> AllSubsetValues(ValueOracle& oracle) {
  const std::size_t n = oracle.size();
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = oracle.Value(MaskMembers(mask, n));
  }
  return values;
}

}  // namespace

OptResult BruteForceOpt(ValueOracle& oracle, const CostVector& cost,
                        std::size_t cap) {
  const std::size_t n = oracle.size();
  if (n > cap) throw CapExceededError("brute_force_opt", n, cap);

  std::vector<Element> best_members;
  double best_value = 0.0, best_f = 0.0, best_c = 0.0;
  bool have_best = false;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<Element> members = MaskMembers(mask, n);
    const double f = oracle.Value(members);
    const double c = cost.Cost(members);
    const double h = f - c;
    if (!have_best || h > best_value ||
        (h == best_value && members < best_members)) {
      have_best = true;
      best_value = h;
      best_f = f;
      best_c = c;
      best_members = std::move(members);
    }
  }
  return OptResult{ElementSet(n, best_members), best_value, best_f, best_c};
}

double EmpiricalSubmodularityRatio(ValueOracle& oracle, std::size_t cap) {
  const std::size_t n = oracle.size();
  if (n > cap) throw CapExceededError("empirical_submodularity_ratio", n, cap);

  const std::vector<double> f = AllSubsetValues(oracle);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  double ratio = 1.0;
  std::vector<double> singleton_gain(n);
  for (std::uint64_t s = 0; s <= full; ++s) {
    for (std::size_t u = 0; u < n; ++u) {
      singleton_gain[u] = (s >> u & 1ULL) ? 0.0 : f[s | (1ULL << u)] - f[s];
    }
    const std::uint64_t rest = full & ~s;
    // Non-empty submasks d of rest; T = s ∪ d.
    for (std::uint64_t d = rest; d != 0; d = (d - 1) & rest) {
      const double joint = f[s | d] - f[s];
      if (!(joint > 0.0)) continue;
      double sum = 0.0;
      for (std::uint64_t bits = d; bits != 0; bits &= bits - 1) {
        sum += singleton_gain[std::countr_zero(bits)];
      }
      ratio = std::min(ratio, sum / joint);
    }
  }
  return std::min(ratio, 1.0);
}

}  // namespace regmax
