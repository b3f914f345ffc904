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

#include "regmax/bounds.h"

#include <cmath>
#include <stdexcept>

namespace regmax {

bool LossTermDefined(double f_opt, double c_opt) {
  return f_opt > 0.0 && c_opt > 0.0;
}

double LossTerm(double f_opt, double c_opt) {
  if (!LossTermDefined(f_opt, c_opt)) {
    throw std::domain_error("loss term needs f(OPT) > 0 and c(OPT) > 0");
  }
  return c_opt * std::log(f_opt / c_opt);
}

double UpBound(double f_opt, double c_opt, double gamma, double epsilon) {
  const double scale = gamma * (1.0 - epsilon);
  return scale * f_opt - c_opt - LossTerm(f_opt, c_opt) / scale;
}

double RoiBound(double f_opt, double c_opt, double gamma) {
  return gamma * f_opt - c_opt - LossTerm(f_opt, c_opt) / gamma;
}

NoisyBoundTerms NoisyPenalty(double c_opt, double c_min, double c_max,
                             std::size_t n, double gamma, double epsilon,
                             double delta) {
  NoisyBoundTerms t;
  const auto nn = static_cast<double>(n);
  t.beta = c_opt / c_min;
  t.beta_prime = c_max / c_opt;
  t.penalty = 2.0 * delta *
              (t.beta + nn / gamma + 1.0 + nn * (1.0 - epsilon) * t.beta_prime);
  return t;
}

double NoisyUpBound(double f_opt, double c_opt, double gamma, double epsilon,
                    double delta, std::size_t n, double c_min, double c_max) {
  return UpBound(f_opt, c_opt, gamma, epsilon) -
         NoisyPenalty(c_opt, c_min, c_max, n, gamma, epsilon, delta).penalty;
}

double UdgExpectationBound(double f_opt, double c_opt, double gamma) {
  return (1.0 - std::exp(-gamma)) * f_opt - c_opt;
}

}  // namespace regmax
