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

#include "regmax/noisy_oracle.h"

#include <stdexcept>

#include "regmax/random.h"

namespace regmax {
namespace {

class NoisyState : public OracleState {
 public:
  explicit NoisyState(const NoisyOracle& oracle)
      : oracle_(oracle), inner_(oracle.inner().NewState()) {}

  double value() const override {
    return inner_->value() + oracle_.NoiseForDigest(digest_);
  }

  double Gain(Element e) override {
    const double inner_gain = inner_->Gain(e);
    const std::uint64_t next = digest_ + oracle_.ElementDigest(e);
    return inner_gain + oracle_.NoiseForDigest(next) -
           oracle_.NoiseForDigest(digest_);
  }

  void Add(Element e) override {
    inner_->Add(e);
    digest_ += oracle_.ElementDigest(e);
  }

 private:
  const NoisyOracle& oracle_;
  std::unique_ptr<OracleState> inner_;
  std::uint64_t digest_ = 0;
};

}  // namespace

NoisyOracle::NoisyOracle(const ValueOracle& inner, double delta,
                         std::uint64_t seed)
    : ValueOracle(inner.size()), inner_(inner), delta_(delta), seed_(seed) {
  if (!(delta >= 0.0)) throw std::invalid_argument("noise bound must be >= 0");
}

std::uint64_t NoisyOracle::ElementDigest(Element e) const {
  return Mix64(static_cast<std::uint64_t>(e) ^ Mix64(seed_));
}

double NoisyOracle::NoiseForDigest(std::uint64_t digest) const {
  if (digest == 0) return 0.0;
  const std::uint64_t h = Mix64(digest ^ seed_);
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;  // [0, 1)
  return delta_ * (2.0 * u - 1.0);
}

double NoisyOracle::Compute(std::span<const Element> set) const {
  std::uint64_t digest = 0;
  for (Element e : set) digest += ElementDigest(e);
  return inner_.Compute(set) + NoiseForDigest(digest);
}

std::unique_ptr<OracleState> NoisyOracle::NewState() const {
  return std::make_unique<NoisyState>(*this);
}

}  // namespace regmax
