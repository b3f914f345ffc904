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

#ifndef REGMAX_NOISY_ORACLE_H_
#define REGMAX_NOISY_ORACLE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "regmax/oracle.h"

namespace regmax {

// delta-approximate view of an inner oracle: f~(S) = f(S) + delta * u(S)
// where u(S) in [-1, 1) is a deterministic hash of the member set and the
// seed. u(∅) = 0, so f~ stays normalized. Repeated queries of the same set
// return the same value regardless of member order.
//
// Calls are charged to this wrapper, not to the inner oracle.
class NoisyOracle : public ValueOracle {
 public:
  NoisyOracle(const ValueOracle& inner, double delta, std::uint64_t seed);

  double Compute(std::span<const Element> set) const override;
  std::unique_ptr<OracleState> NewState() const override;
  std::string name() const override { return "noisy(" + inner_.name() + ")"; }

  double delta() const { return delta_; }
  const ValueOracle& inner() const { return inner_; }

  // delta * u(S) for a set whose order-independent digest is `digest`.
  double NoiseForDigest(std::uint64_t digest) const;
  // Per-element contribution to the set digest (digests add mod 2^64).
  std::uint64_t ElementDigest(Element e) const;

 private:
  const ValueOracle& inner_;
  double delta_;
  std::uint64_t seed_;
};

}  // namespace regmax

#endif  // REGMAX_NOISY_ORACLE_H_
