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

#include "tacs/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tacs/distributions.hpp"
#include "tacs/error.hpp"

namespace tacs::stats {

namespace {

bool Has(const ModelSpec& spec, Term term) {
  return std::find(spec.terms.begin(), spec.terms.end(), term) !=
         spec.terms.end();
}

// Applies the Householder reflector (I - 2 v v^T), v stored in rows k.. of
// column k of `v`, to column j of `a`.
void Reflect(const std::vector<double>& v, std::size_t k, Matrix* a,
             std::size_t j) {
  double dot = 0.0;
  for (std::size_t i = k; i < a->rows(); ++i) dot += v[i] * (*a)(i, j);
  dot *= 2.0;
  for (std::size_t i = k; i < a->rows(); ++i) (*a)(i, j) -= dot * v[i];
}

}  // namespace

std::string_view ToString(Outcome outcome) {
  return outcome == Outcome::kEnProp ? "en_prop" : "switch_count";
}

void ModelSpec::Validate() const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (terms[i] == terms[j]) {
        throw std::invalid_argument("model '" + name + "' repeats a term");
      }
    }
  }
  if (Has(*this, Term::kSentimentByLength) &&
      !(Has(*this, Term::kSentiment) && Has(*this, Term::kLength))) {
    throw std::invalid_argument(
        "model '" + name +
        "': interaction requires both sentiment and length main effects");
  }
}

ModelSpec ModelSpec::Model1a() {
  return {"1a", Outcome::kEnProp, {Term::kSentiment}};
}
ModelSpec ModelSpec::Model1b() {
  return {"1b",
          Outcome::kEnProp,
          {Term::kSentiment, Term::kLength, Term::kSentimentByLength}};
}
ModelSpec ModelSpec::Model2a() {
  return {"2a", Outcome::kSwitchCount, {Term::kSentiment}};
}
ModelSpec ModelSpec::Model2b() {
  return {"2b",
          Outcome::kSwitchCount,
          {Term::kSentiment, Term::kLength, Term::kSentimentByLength}};
}

ModelData BuildDesignMatrix(std::span<const UtteranceMetrics> records,
                            const ModelSpec& spec) {
  spec.Validate();
  if (records.empty()) throw std::invalid_argument("no records to model");
  const bool sentiment = Has(spec, Term::kSentiment);
  const bool length = Has(spec, Term::kLength);
  const bool interaction = Has(spec, Term::kSentimentByLength);

  ModelData data;
  auto& names = data.design.column_names;
  names.emplace_back(kInterceptName);
  if (sentiment) {
    names.emplace_back(ToString(Sentiment::kMixedFeelings));
    names.emplace_back(ToString(Sentiment::kNegative));
  }
  if (length) names.emplace_back("token_count");
  if (interaction) {
    names.push_back(std::string(ToString(Sentiment::kMixedFeelings)) +
                    ":token_count");
    names.push_back(std::string(ToString(Sentiment::kNegative)) +
                    ":token_count");
  }

  Matrix x(records.size(), names.size());
  data.y.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const UtteranceMetrics& m = records[i];
    if (!m.sentiment || !(*m.sentiment == Sentiment::kPositive ||
                          *m.sentiment == Sentiment::kMixedFeelings ||
                          *m.sentiment == Sentiment::kNegative)) {
      throw FormatError(
          "record " + std::to_string(i) + " has sentiment '" +
          (m.sentiment ? std::string(ToString(*m.sentiment)) : "<none>") +
          "', expected Positive, Mixed_feelings or Negative");
    }
    const double mixed = *m.sentiment == Sentiment::kMixedFeelings ? 1.0 : 0.0;
    const double negative = *m.sentiment == Sentiment::kNegative ? 1.0 : 0.0;
    const auto len = static_cast<double>(m.token_count);
    std::size_t c = 0;
    x(i, c++) = 1.0;
    if (sentiment) {
      x(i, c++) = mixed;
      x(i, c++) = negative;
    }
    if (length) x(i, c++) = len;
    if (interaction) {
      x(i, c++) = mixed * len;
      x(i, c++) = negative * len;
    }
    data.y.push_back(spec.outcome == Outcome::kEnProp
                         ? m.en_prop
                         : static_cast<double>(m.switch_count));
  }
  data.design.values = std::move(x);
  return data;
}

bool IsExactFit(const FitResult& fit) {
  const double scale = fit.tss > 0.0 ? fit.tss : fit.yss;
  return fit.rss <= 0.0 || fit.rss <= 1e-20 * scale;
}

FitResult FitOls(const DesignMatrix& design, std::span<const double> y) {
  const std::size_t n = design.n();
  const std::size_t p = design.p();
  if (y.size() != n) throw std::invalid_argument("outcome length != rows");
  if (p == 0) throw std::invalid_argument("design has no columns");
  if (n < p) {
    throw DegenerateError("design matrix has fewer rows (" +
                          std::to_string(n) + ") than columns (" +
                          std::to_string(p) + ")");
  }

  // Householder QR in place; the outcome rides along as an extra column so
  // that it ends up holding Q^T y.
  Matrix a(n, p + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) a(i, j) = design.values(i, j);
    a(i, p) = y[i];
  }
  std::vector<double> v(n);
  for (std::size_t k = 0; k < p; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) norm2 += a(i, k) * a(i, k);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) continue;
    const double alpha = a(k, k) > 0.0 ? -norm : norm;
    for (std::size_t i = k; i < n; ++i) v[i] = a(i, k);
    v[k] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) vnorm2 += v[i] * v[i];
    const double inv = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k; i < n; ++i) v[i] *= inv;
    for (std::size_t j = k + 1; j <= p; ++j) Reflect(v, k, &a, j);
    a(k, k) = alpha;
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = 0.0;
  }

  double largest = 0.0;
  for (std::size_t k = 0; k < p; ++k) largest = std::max(largest, std::fabs(a(k, k)));
  for (std::size_t k = 0; k < p; ++k) {
    if (!(std::fabs(a(k, k)) > kRankTolerance * largest)) {
      const std::string name =
          k < design.column_names.size() ? design.column_names[k]
                                         : "#" + std::to_string(k);
      throw DegenerateError("design matrix is rank-deficient: column '" + name +
                            "' is linearly dependent on the columns before it");
    }
  }

  FitResult fit;
  fit.column_names = design.column_names;
  fit.n = n;
  fit.df_residual = n - p;
  fit.r_factor = Matrix(p, p);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = r; c < p; ++c) fit.r_factor(r, c) = a(r, c);
  }

  fit.coefficients.assign(p, 0.0);
  for (std::size_t r = p; r-- > 0;) {
    double s = a(r, p);
    for (std::size_t c = r + 1; c < p; ++c) s -= a(r, c) * fit.coefficients[c];
    fit.coefficients[r] = s / a(r, r);
  }

  double mean = 0.0;
  for (double yi : y) mean += yi;
  mean /= static_cast<double>(n);
  fit.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = design.values.row(i);
    double fitted = 0.0;
    for (std::size_t j = 0; j < p; ++j) fitted += row[j] * fit.coefficients[j];
    fit.residuals[i] = y[i] - fitted;
    fit.rss += fit.residuals[i] * fit.residuals[i];
    fit.tss += (y[i] - mean) * (y[i] - mean);
    fit.yss += y[i] * y[i];
  }
  fit.r_squared =
      fit.tss > 0.0 ? std::clamp(1.0 - fit.rss / fit.tss, 0.0, 1.0) : 0.0;
  return fit;
}

FitResult CoefficientInference(FitResult fit, const DesignMatrix& design) {
  const std::size_t p = fit.coefficients.size();
  if (design.p() != p || design.n() != fit.n || fit.r_factor.rows() != p) {
    throw std::invalid_argument("design does not match the fit");
  }
  if (fit.df_residual == 0) {
    throw DegenerateError("no residual degrees of freedom for inference");
  }

  fit.standard_errors.assign(p, 0.0);
  fit.t_values.assign(p, std::numeric_limits<double>::quiet_NaN());
  fit.p_values.assign(p, 0.0);
  fit.has_inference = true;
  fit.degenerate = IsExactFit(fit);
  if (fit.degenerate) return fit;

  // Columns of R^{-1} by back substitution; diag((R^T R)^{-1}) is the
  // squared row norms of R^{-1}.
  const Matrix& r = fit.r_factor;
  Matrix inv(p, p);
  for (std::size_t col = 0; col < p; ++col) {
    for (std::size_t row = p; row-- > 0;) {
      double s = row == col ? 1.0 : 0.0;
      for (std::size_t k = row + 1; k < p; ++k) s -= r(row, k) * inv(k, col);
      inv(row, col) = s / r(row, row);
    }
  }
  const double df = static_cast<double>(fit.df_residual);
  const double s2 = fit.rss / df;
  for (std::size_t i = 0; i < p; ++i) {
    double sum = 0.0;
    for (std::size_t j = i; j < p; ++j) sum += inv(i, j) * inv(i, j);
    fit.standard_errors[i] = std::sqrt(s2 * sum);
    fit.t_values[i] = fit.coefficients[i] / fit.standard_errors[i];
    fit.p_values[i] = TwoSidedTPValue(fit.t_values[i], df);
  }
  return fit;
}

FitResult FitModel(std::span<const UtteranceMetrics> records,
                   const ModelSpec& spec) {
  const ModelData data = BuildDesignMatrix(records, spec);
  FitResult fit =
      CoefficientInference(FitOls(data.design, data.y), data.design);
  fit.spec = spec;
  return fit;
}

AnovaResult AnovaCompare(const FitResult& reduced, const FitResult& full) {
  if (reduced.n != full.n) {
    throw std::invalid_argument("models were fitted on different observations");
  }
  if (std::fabs(reduced.tss - full.tss) >
      1e-9 * std::max({1.0, reduced.tss, full.tss})) {
    throw std::invalid_argument("models were fitted on different outcomes");
  }
  for (const std::string& name : reduced.column_names) {
    if (std::find(full.column_names.begin(), full.column_names.end(), name) ==
        full.column_names.end()) {
      throw std::invalid_argument("models are not nested: column '" + name +
                                  "' is missing from the full model");
    }
  }
  if (full.column_names.size() <= reduced.column_names.size()) {
    throw std::invalid_argument(
        "models are not nested: full model adds no columns");
  }
  if (full.df_residual == 0 || IsExactFit(full)) {
    throw DegenerateError("saturated full model");
  }

  AnovaResult result;
  result.df_numerator = full.column_names.size() - reduced.column_names.size();
  result.df_denominator = full.df_residual;
  // A gain within rounding of the reduced RSS is no gain.
  double gain = reduced.rss - full.rss;
  if (gain <= 64.0 * std::numeric_limits<double>::epsilon() * reduced.rss) {
    gain = 0.0;
  }
  result.f_statistic = (gain / static_cast<double>(result.df_numerator)) /
                       (full.rss / static_cast<double>(result.df_denominator));
  result.p_value =
      FSurvival(result.f_statistic, static_cast<double>(result.df_numerator),
                static_cast<double>(result.df_denominator));
  return result;
}

QQData MakeQQData(const FitResult& fit) {
  const std::size_t n = fit.residuals.size();
  if (n < 3) throw std::invalid_argument("Q-Q data needs at least 3 residuals");
  double mean = 0.0;
  for (double r : fit.residuals) mean += r;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double r : fit.residuals) ss += (r - mean) * (r - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0)) throw DegenerateError("zero residual variance");

  std::vector<double> z(fit.residuals);
  for (double& v : z) v /= sd;
  std::sort(z.begin(), z.end());
  QQData qq;
  qq.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double pos = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    qq.points.emplace_back(NormalQuantile(pos), z[i]);
  }
  return qq;
}

}  // namespace tacs::stats
