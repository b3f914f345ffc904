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

#include "regmax/aoptimal.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "regmax/errors.h"
#include "regmax/random.h"

namespace regmax {
namespace {

Eigen::MatrixXd SpdInverse(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("matrix is not symmetric positive-definite");
  }
  Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
  return 0.5 * (inv + inv.transpose());
}

class PosteriorOracleState : public OracleState {
 public:
  explicit PosteriorOracleState(const DesignInstance& inst) : state_(inst) {}
  double value() const override { return state_.value(); }
  double Gain(Element e) override { return state_.Gain(e); }
  void Add(Element e) override { state_.Advance(e); }

 private:
  PosteriorState state_;
};

bool ParseNumber(const std::string& field, double& out) {
  std::size_t begin = field.find_first_not_of(" \t\r");
  std::size_t end = field.find_last_not_of(" \t\r");
  if (begin == std::string::npos) return false;
  const std::string trimmed = field.substr(begin, end - begin + 1);
  char* stop = nullptr;
  out = std::strtod(trimmed.c_str(), &stop);
  return stop == trimmed.c_str() + trimmed.size() && std::isfinite(out);
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string Trim(const std::string& s) {
  const std::size_t begin = s.find_first_not_of(" \t\r\"");
  if (begin == std::string::npos) return "";
  const std::size_t end = s.find_last_not_of(" \t\r\"");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

DesignInstance::DesignInstance(Eigen::MatrixXd features, Eigen::MatrixXd prior,
                               double noise_sigma, double p)
    : x_(std::move(features)), prior_(std::move(prior)), p_(p) {
  if (x_.rows() == 0) throw std::invalid_argument("design needs d >= 1");
  if (!x_.allFinite()) throw std::invalid_argument("features must be finite");
  if (!(p_ > 0.0 && p_ <= 1.0)) throw std::invalid_argument("cost penalty p must be in (0, 1]");
  const auto d = x_.rows();
  if (prior_.size() == 0) prior_ = Eigen::MatrixXd::Identity(d, d);
  if (prior_.rows() != d || prior_.cols() != d) {
    throw std::invalid_argument("prior covariance must be d x d");
  }
  if (!prior_.isApprox(prior_.transpose(), 1e-12)) {
    throw std::invalid_argument("prior covariance must be symmetric");
  }
  try {
    prior_inv_ = SpdInverse(prior_);
  } catch (const NumericalError&) {
    throw std::invalid_argument("prior covariance must be positive-definite");
  }
  sigma_ = noise_sigma > 0.0 ? noise_sigma : 1.0 / std::sqrt(static_cast<double>(d));
  prior_trace_ = prior_.trace();
}

Eigen::MatrixXd PosteriorPrecision(const DesignInstance& inst,
                                   std::span<const Element> set) {
  Eigen::MatrixXd m = inst.prior_inverse();
  const double scale = 1.0 / inst.noise_variance();
  for (Element e : set) {
    if (e < 0 || static_cast<std::size_t>(e) >= inst.n()) {
      throw std::out_of_range("measurement id outside design");
    }
    const auto x = inst.features().col(e);
    m.noalias() += scale * x * x.transpose();
  }
  return m;
}

double AoValue(const DesignInstance& inst, std::span<const Element> set) {
  if (set.empty()) return 0.0;
  return inst.prior_trace() - SpdInverse(PosteriorPrecision(inst, set)).trace();
}

PosteriorState::PosteriorState(const DesignInstance& inst)
    : inst_(inst),
      set_(inst.n()),
      m_(inst.prior_inverse()),
      m_inv_(inst.prior()) {}

double PosteriorState::Gain(Element e) const {
  if (set_.Contains(e)) throw PreconditionError("element already selected");
  const auto x = inst_.features().col(e);
  const Eigen::VectorXd z = m_inv_ * x;
  const double denom = inst_.noise_variance() + x.dot(z);
  if (!(denom > 0.0)) {
    throw NumericalError("non-positive rank-one denominator; rebuild the posterior");
  }
  return z.squaredNorm() / denom;
}

double PosteriorState::Advance(Element e) {
  if (set_.Contains(e)) throw PreconditionError("element already selected");
  const auto x = inst_.features().col(e);
  const Eigen::VectorXd z = m_inv_ * x;
  const double denom = inst_.noise_variance() + x.dot(z);
  if (!(denom > 0.0)) {
    throw NumericalError("non-positive rank-one denominator; rebuild the posterior");
  }
  const double gain = z.squaredNorm() / denom;
  set_.Insert(e);
  m_.noalias() += (1.0 / inst_.noise_variance()) * x * x.transpose();
  m_inv_.noalias() -= (z * z.transpose()) / denom;
  m_inv_ = 0.5 * (m_inv_ + m_inv_.transpose());
  if (++since_refresh_ >= kRefreshInterval) Refresh();
  return gain;
}

void PosteriorState::Refresh() {
  m_inv_ = SpdInverse(m_);
  since_refresh_ = 0;
}

AOptimalOracle::AOptimalOracle(std::shared_ptr<const DesignInstance> inst)
    : ValueOracle(inst ? inst->n() : 0), inst_(std::move(inst)) {
  if (!inst_) throw std::invalid_argument("null design instance");
}

double AOptimalOracle::Compute(std::span<const Element> set) const {
  return AoValue(*inst_, set);
}

std::unique_ptr<OracleState> AOptimalOracle::NewState() const {
  return std::make_unique<PosteriorOracleState>(*inst_);
}

CostVector ProportionalCost(ValueOracle& oracle, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("cost penalty p must be in (0, 1]");
  std::vector<double> costs(oracle.size());
  for (std::size_t e = 0; e < costs.size(); ++e) {
    const Element single[] = {static_cast<Element>(e)};
    costs[e] = p * oracle.Value(single);
    if (!(costs[e] > 0.0)) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " has zero singleton value, so its cost would be 0");
    }
  }
  return CostVector(std::move(costs));
}

std::vector<std::size_t> StandardizeColumns(Eigen::MatrixXd& rows) {
  std::vector<std::size_t> dropped;
  std::vector<Eigen::Index> kept;
  const auto n = static_cast<double>(rows.rows());
  for (Eigen::Index j = 0; j < rows.cols(); ++j) {
    const double mean = rows.col(j).mean();
    rows.col(j).array() -= mean;
    const double sd = std::sqrt(rows.col(j).squaredNorm() / n);
    if (!(sd > 0.0)) {
      dropped.push_back(static_cast<std::size_t>(j));
      continue;
    }
    rows.col(j) /= sd;
    kept.push_back(j);
  }
  if (!dropped.empty()) {
    Eigen::MatrixXd compact(rows.rows(), static_cast<Eigen::Index>(kept.size()));
    for (std::size_t k = 0; k < kept.size(); ++k) {
      compact.col(static_cast<Eigen::Index>(k)) = rows.col(kept[k]);
    }
    rows = std::move(compact);
  }
  return dropped;
}

FeatureTable LoadFeatureCsv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::vector<std::vector<double>> values;
  std::vector<std::string> header;
  std::size_t width = 0;
  std::size_t header_line = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = SplitCsv(line);
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t j = 0; j < fields.size(); ++j) {
      numeric = numeric && ParseNumber(fields[j], row[j]);
    }
    if (!numeric) {
      if (values.empty() && header.empty()) {
        for (const auto& f : fields) header.push_back(Trim(f));
        width = header.size();
        header_line = line_no;
        continue;
      }
      throw ParseError(path, line_no, "non-numeric field");
    }
    if (width == 0) width = row.size();
    if (row.size() != width) {
      throw ParseError(path, line_no,
                       "expected " + std::to_string(width) + " fields, found " +
                           std::to_string(row.size()));
    }
    values.push_back(std::move(row));
  }
  if (values.empty()) throw ParseError(path, 0, "empty instance: no data rows");
  if (header.empty()) {
    for (std::size_t j = 0; j < width; ++j) header.push_back(std::to_string(j));
  }

  std::vector<char> keep(width, 1);
  for (const auto& name : options.drop_columns) {
    bool found = false;
    for (std::size_t j = 0; j < width; ++j) {
      if (header[j] == name) {
        keep[j] = 0;
        found = true;
      }
    }
    long long index = -1;
    if (!found && !name.empty() &&
        name.find_first_not_of("0123456789") == std::string::npos) {
      index = std::stoll(name);
      if (static_cast<std::size_t>(index) < width) {
        keep[index] = 0;
        found = true;
      }
    }
    if (!found) {
      throw ParseError(path, header_line, "no column named '" + name + "' to drop");
    }
  }

  FeatureTable table;
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < width; ++j) {
    if (keep[j]) {
      cols.push_back(j);
      table.columns.push_back(header[j]);
    }
  }
  if (cols.empty()) throw ParseError(path, 0, "no feature columns left");
  table.rows.resize(static_cast<Eigen::Index>(values.size()),
                    static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      table.rows(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          values[i][cols[k]];
    }
  }
  if (options.normalize) {
    const auto dropped = StandardizeColumns(table.rows);
    for (auto it = dropped.rbegin(); it != dropped.rend(); ++it) {
      table.dropped_constant.insert(table.dropped_constant.begin(),
                                    table.columns[*it]);
      table.columns.erase(table.columns.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    if (table.columns.empty()) throw ParseError(path, 0, "all feature columns are constant");
  }
  return table;
}

Eigen::MatrixXd GenerateFeatures(std::size_t n, std::size_t d,
                                 std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    for (Eigen::Index j = 0; j < rows.cols(); ++j) rows(i, j) = rng.Normal();
  }
  if (n > 1) StandardizeColumns(rows);
  return rows.transpose();
}

}  // namespace regmax
