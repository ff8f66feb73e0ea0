// Copyright 2026 The tacs Authors. All Rights Reserved.
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

#ifndef TACS_REGRESSION_HPP_
#define TACS_REGRESSION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tacs/cs_metrics.hpp"

namespace tacs::stats {

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class Outcome { kEnProp, kSwitchCount };

std::string_view ToString(Outcome outcome);

enum class Term {
  kSentiment,          // dummies for Mixed_feelings and Negative
  kLength,             // token_count
  kSentimentByLength,  // dummy x token_count
};

struct ModelSpec {
  std::string name;
  Outcome outcome = Outcome::kEnProp;
  std::vector<Term> terms;

  // Throws std::invalid_argument for duplicate terms or an interaction
  // without both main effects.
  void Validate() const;

  // Sentiment only, and sentiment x length full factorial.
  static ModelSpec Model1a();
  static ModelSpec Model1b();
  static ModelSpec Model2a();
  static ModelSpec Model2b();
};

inline constexpr std::string_view kInterceptName = "(Intercept)";

struct DesignMatrix {
  Matrix values;
  // Fixed order: (Intercept), Mixed_feelings, Negative, token_count,
  // Mixed_feelings:token_count, Negative:token_count, keeping only the
  // columns the model's terms produce.
  std::vector<std::string> column_names;

  std::size_t n() const { return values.rows(); }
  std::size_t p() const { return values.cols(); }
};

struct ModelData {
  DesignMatrix design;
  std::vector<double> y;
};

// Dummy coding with Positive as the omitted reference level. Throws
// FormatError for a record whose sentiment is missing or outside the three
// analysis classes, std::invalid_argument for no records.
ModelData BuildDesignMatrix(std::span<const UtteranceMetrics> records,
                            const ModelSpec& spec);

// Relative pivot threshold below which a design column counts as dependent.
inline constexpr double kRankTolerance = 1e-10;

struct FitResult {
  std::vector<std::string> column_names;
  std::vector<double> coefficients;
  std::vector<double> standard_errors;
  std::vector<double> t_values;
  std::vector<double> p_values;
  std::vector<double> residuals;
  double r_squared = 0.0;
  double rss = 0.0;
  double tss = 0.0;
  // Uncentered sum of squares of the outcome.
  double yss = 0.0;
  std::size_t n = 0;
  std::size_t df_residual = 0;
  // Set by CoefficientInference when the fit is exact (rss ~ 0): standard
  // errors are 0, t values NaN, p values 0.
  bool degenerate = false;
  bool has_inference = false;
  // Upper-triangular factor of the Householder QR of the design.
  Matrix r_factor;
  std::optional<ModelSpec> spec;
};

// True when rss is zero or negligible next to the outcome's scale:
// rss <= 1e-20 * tss, or rss <= 1e-20 * yss for a constant outcome.
bool IsExactFit(const FitResult& fit);

// Least squares through Householder QR of the design; no normal equations.
// Requires n >= p. Throws DegenerateError("design matrix is rank-deficient
// ...") naming the first column whose pivot falls below kRankTolerance times
// the largest pivot. Inference fields stay empty.
FitResult FitOls(const DesignMatrix& design, std::span<const double> y);

// Fills standard errors from s^2 (R^T R)^{-1} = s^2 R^{-1} R^{-T}, t values
// and two-sided p values. Throws DegenerateError when df_residual == 0.
FitResult CoefficientInference(FitResult fit, const DesignMatrix& design);

// BuildDesignMatrix + FitOls + CoefficientInference, with the ModelSpec recorded.
FitResult FitModel(std::span<const UtteranceMetrics> records,
                   const ModelSpec& spec);

struct AnovaResult {
  double f_statistic = 0.0;
  std::size_t df_numerator = 0;
  std::size_t df_denominator = 0;
  double p_value = 1.0;
};

// Nested-model F test: F = ((RSS_r - RSS_f) / dp) / (RSS_f / df_f).
// Throws std::invalid_argument when the fits are not nested on the same
// observations, DegenerateError("saturated full model") when RSS_f is an
// exact fit.
AnovaResult AnovaCompare(const FitResult& reduced, const FitResult& full);

struct QQData {
  // (theoretical quantile, standardized residual), both ascending.
  std::vector<std::pair<double, double>> points;
};

// Residuals divided by their sample standard deviation and sorted, against
// normal quantiles at plotting positions (i - 0.5) / n. Requires n >= 3
// (std::invalid_argument); zero residual variance throws DegenerateError.
QQData MakeQQData(const FitResult& fit);

}  // namespace tacs::stats

#endif  // TACS_REGRESSION_HPP_
