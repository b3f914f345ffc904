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

#ifndef REGMAX_BOUNDS_H_
#define REGMAX_BOUNDS_H_

#include <cstddef>

namespace regmax {

// Right-hand sides of the approximation guarantees, in terms of f(OPT) and
// c(OPT). All logarithms are natural. The loss term
// A = c(OPT) * ln(f(OPT) / c(OPT)) is only defined for f(OPT) > 0 and
// c(OPT) > 0, i.e. for a non-empty OPT.

bool LossTermDefined(double f_opt, double c_opt);
double LossTerm(double f_opt, double c_opt);

// UP and threshold-ROI:
//   gamma (1-eps) f(OPT) - c(OPT) - A / (gamma (1-eps)).
double UpBound(double f_opt, double c_opt, double gamma, double epsilon);

// gamma-ROI: gamma f(OPT) - c(OPT) - A / gamma.
double RoiBound(double f_opt, double c_opt, double gamma);

struct NoisyBoundTerms {
  double beta = 0.0;        // c(OPT) / c_min
  double beta_prime = 0.0;  // c_max / c(OPT)
  double penalty = 0.0;     // 2 delta (beta + n/gamma + 1 + n (1-eps) beta')
};

NoisyBoundTerms NoisyPenalty(double c_opt, double c_min, double c_max,
                             std::size_t n, double gamma, double epsilon,
                             double delta);

// UP on a delta-approximate oracle: UpBound minus NoisyPenalty.
double NoisyUpBound(double f_opt, double c_opt, double gamma, double epsilon,
                    double delta, std::size_t n, double c_min, double c_max);

// UDG, in expectation: (1 - e^{-gamma}) f(OPT) - c(OPT).
double UdgExpectationBound(double f_opt, double c_opt, double gamma);

}  // namespace regmax

#endif  // REGMAX_BOUNDS_H_
