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

#ifndef REGMAX_AOPTIMAL_H_
#define REGMAX_AOPTIMAL_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "regmax/cost.h"
#include "regmax/element_set.h"
#include "regmax/oracle.h"

namespace regmax {

// Bayesian A-optimal design over n candidate measurements x_e in R^d:
//   f(S) = Tr(Sigma) - Tr(M_S^{-1}),  M_S = Sigma^{-1} + X_S X_S^T / sigma^2.
// Monotone and weakly submodular.
class DesignInstance {
 public:
  // `features` is d x n, one column per measurement. An empty `prior`
  // selects the identity; noise_sigma <= 0 selects 1 / sqrt(d). Throws
  // std::invalid_argument on non-finite features, a prior that is not
  // symmetric positive-definite, or p outside (0, 1].
  DesignInstance(Eigen::MatrixXd features, Eigen::MatrixXd prior = {},
                 double noise_sigma = 0.0, double p = 1.0);

  std::size_t n() const { return static_cast<std::size_t>(x_.cols()); }
  std::size_t d() const { return static_cast<std::size_t>(x_.rows()); }
  const Eigen::MatrixXd& features() const { return x_; }
  const Eigen::MatrixXd& prior() const { return prior_; }
  const Eigen::MatrixXd& prior_inverse() const { return prior_inv_; }
  double noise_sigma() const { return sigma_; }
  double noise_variance() const { return sigma_ * sigma_; }
  double p() const { return p_; }
  double prior_trace() const { return prior_trace_; }

 private:
  Eigen::MatrixXd x_;
  Eigen::MatrixXd prior_;
  Eigen::MatrixXd prior_inv_;
  double sigma_;
  double p_;
  double prior_trace_;
};

// M_S for the given set, built from scratch.
Eigen::MatrixXd PosteriorPrecision(const DesignInstance& inst,
                                   std::span<const Element> set);

// f(S) from a fresh symmetric solve of M_S.
double AoValue(const DesignInstance& inst, std::span<const Element> set);

// Incremental posterior: keeps M_S and M_S^{-1} and applies Sherman-Morrison
// updates, re-inverting from scratch every kRefreshInterval updates.
class PosteriorState {
 public:
  static constexpr int kRefreshInterval = 64;

  explicit PosteriorState(const DesignInstance& inst);

  // f(e | S) = |z|^2 / (sigma^2 + <x_e, z>) with z = M_S^{-1} x_e. Throws
  // PreconditionError when e ∈ S and NumericalError when the denominator
  // is not positive.
  double Gain(Element e) const;
  // Adds e and returns its gain.
  double Advance(Element e);
  // Rebuilds M_S^{-1} by direct inversion.
  void Refresh();

  double value() const { return inst_.prior_trace() - m_inv_.trace(); }
  const ElementSet& set() const { return set_; }
  const Eigen::MatrixXd& precision() const { return m_; }
  const Eigen::MatrixXd& precision_inverse() const { return m_inv_; }

 private:
  const DesignInstance& inst_;
  ElementSet set_;
  Eigen::MatrixXd m_;
  Eigen::MatrixXd m_inv_;
  int since_refresh_ = 0;
};

class AOptimalOracle : public ValueOracle {
 public:
  explicit AOptimalOracle(std::shared_ptr<const DesignInstance> inst);

  double Compute(std::span<const Element> set) const override;
  std::unique_ptr<OracleState> NewState() const override;
  std::string name() const override { return "a-optimal"; }

  const DesignInstance& instance() const { return *inst_; }

 private:
  std::shared_ptr<const DesignInstance> inst_;
};

// c(e) = p * f({e}), charging one oracle call per element. Throws
// std::invalid_argument when some singleton value is 0 (e.g. x_e = 0).
CostVector ProportionalCost(ValueOracle& oracle, double p);

struct FeatureTable {
  Eigen::MatrixXd rows;  // one measurement per row
  std::vector<std::string> columns;
  std::vector<std::string> dropped_constant;
};

struct CsvOptions {
  // Column names or 0-based indices to discard, e.g. the regression target.
  std::vector<std::string> drop_columns;
  // Standardize every attribute to mean 0 and standard deviation 1, dropping
  // constant attributes.
  bool normalize = true;
};

// Numeric CSV with an optional header row (detected when the first line has
// a non-numeric field). Throws ParseError naming the line of any malformed
// row, and for files without data rows.
FeatureTable LoadFeatureCsv(const std::string& path, const CsvOptions& options);

// In-place per-column standardization. Returns the indices of constant
// columns, which are removed.
std::vector<std::size_t> StandardizeColumns(Eigen::MatrixXd& rows);

// Random design with standard normal features, standardized per attribute.
Eigen::MatrixXd GenerateFeatures(std::size_t n, std::size_t d,
                                 std::uint64_t seed);

}  // namespace regmax

#endif  // REGMAX_AOPTIMAL_H_
