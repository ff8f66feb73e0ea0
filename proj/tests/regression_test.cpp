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
#include <random>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "gtest/gtest.h"
#include "tacs/distributions.hpp"
#include "tacs/error.hpp"

namespace tacs::stats {
namespace {

UtteranceMetrics Record(Sentiment s, std::size_t length, double en_prop,
                        std::size_t switches = 0) {
  UtteranceMetrics m;
  m.sentiment = s;
  m.token_count = length;
  m.en_prop = en_prop;
  m.switch_count = switches;
  return m;
}

DesignMatrix FromRows(const std::vector<std::vector<double>>& rows) {
  DesignMatrix d;
  d.values = Matrix(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) d.values(i, j) = rows[i][j];
  }
  for (std::size_t j = 0; j < rows[0].size(); ++j) {
    d.column_names.push_back("x" + std::to_string(j));
  }
  return d;
}

FitResult Fit(const DesignMatrix& d, const std::vector<double>& y) {
  return CoefficientInference(FitOls(d, y), d);
}

// Gauss-Jordan inverse of X^T X.
std::vector<std::vector<double>> InverseGram(const DesignMatrix& d) {
  const std::size_t p = d.p();
  std::vector<std::vector<double>> a(p, std::vector<double>(2 * p, 0.0));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t r = 0; r < d.n(); ++r) {
        a[i][j] += d.values(r, i) * d.values(r, j);
      }
    }
    a[i][p + i] = 1.0;
  }
  for (std::size_t c = 0; c < p; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < p; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    const double div = a[c][c];
    for (double& v : a[c]) v /= div;
    for (std::size_t r = 0; r < p; ++r) {
      if (r == c) continue;
      const double f = a[r][c];
      for (std::size_t k = 0; k < 2 * p; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<double>> inv(p, std::vector<double>(p));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) inv[i][j] = a[i][p + j];
  }
  return inv;
}

double Normal(std::mt19937_64& rng) {
  // Box-Muller on our own uniforms keeps the fixture platform-independent.
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

TEST(DesignMatrixTest, SentimentOnly) {
  const std::vector<UtteranceMetrics> r = {Record(Sentiment::kPositive, 5, 0.2)};
  const ModelData d = BuildDesignMatrix(r, ModelSpec::Model1a());
  EXPECT_EQ(d.design.column_names,
            (std::vector<std::string>{"(Intercept)", "Mixed_feelings", "Negative"}));
  EXPECT_EQ(d.design.values, FromRows({{1, 0, 0}}).values);
  EXPECT_EQ(d.y, std::vector<double>{0.2});
}

TEST(DesignMatrixTest, FullFactorial) {
  const std::vector<UtteranceMetrics> r = {Record(Sentiment::kNegative, 5, 0.1, 3)};
  const ModelData d = BuildDesignMatrix(r, ModelSpec::Model2b());
  EXPECT_EQ(d.design.column_names,
            (std::vector<std::string>{"(Intercept)", "Mixed_feelings", "Negative",
                                      "token_count", "Mixed_feelings:token_count",
                                      "Negative:token_count"}));
  EXPECT_EQ(d.design.values, FromRows({{1, 0, 1, 5, 0, 5}}).values);
  EXPECT_EQ(d.y, std::vector<double>{3.0});
}

TEST(DesignMatrixTest, SixRecordExpansion) {
  const std::vector<UtteranceMetrics> r = {
      Record(Sentiment::kPositive, 1, 0), Record(Sentiment::kPositive, 2, 0),
      Record(Sentiment::kMixedFeelings, 3, 0), Record(Sentiment::kMixedFeelings, 4, 0),
      Record(Sentiment::kNegative, 5, 0), Record(Sentiment::kNegative, 6, 0)};
  const ModelData d = BuildDesignMatrix(r, ModelSpec::Model1b());
  EXPECT_EQ(d.design.values, FromRows({{1, 0, 0, 1, 0, 0},
                                       {1, 0, 0, 2, 0, 0},
                                       {1, 1, 0, 3, 3, 0},
                                       {1, 1, 0, 4, 4, 0},
                                       {1, 0, 1, 5, 0, 5},
                                       {1, 0, 1, 6, 0, 6}})
                                 .values);
}

TEST(DesignMatrixTest, RejectsOtherSentiments) {
  std::vector<UtteranceMetrics> r = {Record(Sentiment::kUnknownState, 2, 0)};
  EXPECT_THROW(BuildDesignMatrix(r, ModelSpec::Model1a()), FormatError);
  r[0].sentiment.reset();
  EXPECT_THROW(BuildDesignMatrix(r, ModelSpec::Model1a()), FormatError);
  EXPECT_THROW(BuildDesignMatrix({}, ModelSpec::Model1a()), std::invalid_argument);
}

TEST(ModelSpecTest, Validation) {
  EXPECT_NO_THROW(ModelSpec::Model2b().Validate());
  ModelSpec bad{"x", Outcome::kEnProp, {Term::kSentiment, Term::kSentimentByLength}};
  EXPECT_THROW(bad.Validate(), std::invalid_argument);
  ModelSpec dup{"y", Outcome::kEnProp, {Term::kLength, Term::kLength}};
  EXPECT_THROW(dup.Validate(), std::invalid_argument);
}

TEST(OlsTest, InterceptOnly) {
  const FitResult f = Fit(FromRows({{1}, {1}}), {2, 4});
  EXPECT_NEAR(f.coefficients[0], 3.0, 1e-14);
  EXPECT_NEAR(f.rss, 2.0, 1e-13);
  EXPECT_EQ(f.df_residual, 1u);
  EXPECT_NEAR(f.standard_errors[0], 1.0, 1e-13);
}

TEST(OlsTest, ExactLineIsDegenerate) {
  const FitResult f = Fit(FromRows({{1, 0}, {1, 1}, {1, 2}}), {1, 3, 5});
  EXPECT_NEAR(f.coefficients[0], 1.0, 1e-13);
  EXPECT_NEAR(f.coefficients[1], 2.0, 1e-13);
  EXPECT_NEAR(f.rss, 0.0, 1e-24);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_TRUE(f.degenerate);
  EXPECT_EQ(f.standard_errors, (std::vector<double>{0.0, 0.0}));
  EXPECT_TRUE(std::isnan(f.t_values[0]));
  EXPECT_EQ(f.p_values, (std::vector<double>{0.0, 0.0}));
}

TEST(OlsTest, ConstantOutcomeIsDegenerateWithZeroRSquared) {
  const FitResult f = Fit(FromRows({{1, 0}, {1, 1}, {1, 2}, {1, 7}}), {4, 4, 4, 4});
  EXPECT_TRUE(f.degenerate);
  EXPECT_EQ(f.r_squared, 0.0);
}

TEST(OlsTest, DummyCodingRecoversGroupMeans) {
  std::vector<UtteranceMetrics> r;
  for (double y : {0.1, 0.3}) r.push_back(Record(Sentiment::kPositive, 3, y));
  for (double y : {0.9, 1.0, 0.8}) r.push_back(Record(Sentiment::kMixedFeelings, 3, y));
  for (double y : {0.0, 0.4}) r.push_back(Record(Sentiment::kNegative, 3, y));
  const FitResult f = FitModel(r, ModelSpec::Model1a());
  EXPECT_NEAR(f.coefficients[0], 0.2, 1e-14);
  EXPECT_NEAR(f.coefficients[1], 0.9 - 0.2, 1e-14);
  EXPECT_NEAR(f.coefficients[2], 0.2 - 0.2, 1e-14);
  EXPECT_EQ(f.spec->name, "1a");
}

TEST(OlsTest, StandardErrorsMatchNormalEquations) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 15 + rng() % 30;
    std::vector<std::vector<double>> rows;
    std::vector<double> y;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = Normal(rng), b = static_cast<double>(rng() % 20);
      rows.push_back({1, a, b, a * b});
      y.push_back(1 + 0.5 * a - 0.1 * b + Normal(rng));
    }
    const DesignMatrix d = FromRows(rows);
    const FitResult f = Fit(d, y);
    const auto inv = InverseGram(d);
    const double s2 = f.rss / static_cast<double>(f.df_residual);
    for (std::size_t j = 0; j < d.p(); ++j) {
      const double oracle = std::sqrt(s2 * inv[j][j]);
      EXPECT_NEAR(f.standard_errors[j], oracle, 1e-10 * std::max(1.0, oracle));
      EXPECT_GE(f.p_values[j], 0.0);
      EXPECT_LE(f.p_values[j], 1.0);
    }
    // Normal-equations coefficients agree too.
    for (std::size_t j = 0; j < d.p(); ++j) {
      double beta = 0;
      for (std::size_t k = 0; k < d.p(); ++k) {
        double xty = 0;
        for (std::size_t i = 0; i < n; ++i) xty += d.values(i, k) * y[i];
        beta += inv[j][k] * xty;
      }
      EXPECT_NEAR(f.coefficients[j], beta, 1e-9 * std::max(1.0, std::fabs(beta)));
    }
  }
}

TEST(OlsTest, RankDeficiencyNamesTheColumn) {
  // Every record has the same length, so token_count duplicates the intercept.
  std::vector<UtteranceMetrics> r;
  for (int k = 0; k < 3; ++k) {
    for (Sentiment s : {Sentiment::kPositive, Sentiment::kMixedFeelings,
                        Sentiment::kNegative}) {
      r.push_back(Record(s, 4, 0.1 * k));
    }
  }
  try {
    FitModel(r, ModelSpec::Model1b());
    FAIL() << "expected DegenerateError";
  } catch (const DegenerateError& e) {
    EXPECT_NE(std::string(e.what()).find("'token_count'"), std::string::npos)
        << e.what();
  }
}

TEST(OlsTest, MissingGroupIsRankDeficient) {
  std::vector<UtteranceMetrics> r = {Record(Sentiment::kPositive, 1, 0.1),
                                     Record(Sentiment::kPositive, 2, 0.4),
                                     Record(Sentiment::kNegative, 2, 0.3)};
  EXPECT_THROW(FitModel(r, ModelSpec::Model1a()), DegenerateError);
}

TEST(OlsTest, TooFewRowsAndNoResidualDf) {
  EXPECT_THROW(FitOls(FromRows({{1, 2}}), std::vector<double>{1}), DegenerateError);
  const DesignMatrix square = FromRows({{1, 0}, {1, 1}});
  EXPECT_THROW(CoefficientInference(FitOls(square, std::vector<double>{1, 2}), square),
               DegenerateError);
}

TEST(OlsPropertyTest, OrthogonalityInvarianceAndNesting) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 10 + rng() % 40;
    std::vector<std::vector<double>> small, big;
    std::vector<double> y, y2;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = Normal(rng), b = Normal(rng);
      small.push_back({1, a});
      big.push_back({1, a, b});
      y.push_back(2 * a - b + Normal(rng));
      y2.push_back(3.5 * y.back() - 7.0);
    }
    const DesignMatrix ds = FromRows(small), db = FromRows(big);
    const FitResult fs = Fit(ds, y), fb = Fit(db, y);
    for (std::size_t j = 0; j < db.p(); ++j) {
      double dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += db.values(i, j) * fb.residuals[i];
      EXPECT_NEAR(dot, 0.0, 1e-10);
    }
    EXPECT_LE(fb.rss, fs.rss * (1 + 1e-12));
    EXPECT_NEAR(Fit(db, y2).r_squared, fb.r_squared, 1e-12);
    EXPECT_GE(fb.r_squared, 0.0);
    EXPECT_LE(fb.r_squared, 1.0);
  }
}

TEST(AnovaTest, IdenticalRssGivesZeroF) {
  // The extra column is orthogonal to y's residual, so RSS is unchanged.
  const DesignMatrix reduced = FromRows({{1}, {1}, {1}, {1}});
  DesignMatrix full = FromRows({{1, 1}, {1, -1}, {1, 1}, {1, -1}});
  full.column_names = {"x0", "x1"};
  const std::vector<double> y = {1, 1, 2, 2};
  const AnovaResult a = AnovaCompare(Fit(reduced, y), Fit(full, y));
  EXPECT_EQ(a.f_statistic, 0.0);
  EXPECT_EQ(a.p_value, 1.0);
  EXPECT_EQ(a.df_numerator, 1u);
  EXPECT_EQ(a.df_denominator, 2u);
}

TEST(AnovaTest, HandComputedF) {
  const DesignMatrix reduced = FromRows({{1}, {1}, {1}, {1}, {1}});
  const DesignMatrix full = FromRows({{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}});
  const std::vector<double> y = {1, 2, 2, 4, 6};
  const FitResult fr = Fit(reduced, y), ff = Fit(full, y);
  // Mean 3, TSS 16; slope 1.2 and intercept 0.6 leave residuals
  // .4, .2, -1, -.2, .6 with RSS 1.6.
  EXPECT_NEAR(fr.rss, 16.0, 1e-12);
  EXPECT_NEAR(ff.rss, 1.6, 1e-12);
  const AnovaResult a = AnovaCompare(fr, ff);
  const double f = (16.0 - 1.6) / (1.6 / 3.0);
  EXPECT_NEAR(a.f_statistic, f, 1e-10);
  EXPECT_NEAR(a.p_value, FSurvival(f, 1, 3), 1e-15);
}

TEST(AnovaTest, Contracts) {
  const DesignMatrix line = FromRows({{1, 0}, {1, 1}, {1, 2}});
  const DesignMatrix mean = FromRows({{1}, {1}, {1}});
  EXPECT_THROW(AnovaCompare(Fit(mean, {1, 3, 5}), Fit(line, {1, 3, 5})),
               DegenerateError);
  EXPECT_THROW(AnovaCompare(Fit(line, {1, 3, 4}), Fit(mean, {1, 3, 4})),
               std::invalid_argument);
  EXPECT_THROW(AnovaCompare(Fit(mean, {1, 3, 4}), Fit(line, {1, 3, 9})),
               std::invalid_argument);
  DesignMatrix full3 = FromRows({{1, 0, 1}, {1, 1, 0}, {1, 2, 2}, {1, 5, 1}});
  full3.column_names = {"x0", "z", "w"};
  DesignMatrix red2 = FromRows({{1, 0}, {1, 1}, {1, 2}, {1, 5}});
  EXPECT_THROW(AnovaCompare(Fit(red2, {1, 2, 2, 4}), Fit(full3, {1, 2, 2, 4})),
               std::invalid_argument);
}

TEST(QQTest, ThreeResiduals) {
  FitResult f;
  f.residuals = {1, -1, 0};
  const QQData qq = MakeQQData(f);
  ASSERT_EQ(qq.points.size(), 3u);
  const double q = NormalQuantile(5.0 / 6.0);
  EXPECT_NEAR(qq.points[0].first, -q, 1e-15);
  EXPECT_EQ(qq.points[1].first, 0.0);
  EXPECT_NEAR(qq.points[2].first, q, 1e-15);
  EXPECT_EQ(qq.points[0].second, -1.0);
  EXPECT_EQ(qq.points[1].second, 0.0);
  EXPECT_EQ(qq.points[2].second, 1.0);
}

TEST(QQTest, SignReversalMirrors) {
  std::mt19937_64 rng(12);
  FitResult f, g;
  for (int i = 0; i < 9; ++i) f.residuals.push_back(Normal(rng));
  g.residuals = f.residuals;
  for (double& r : g.residuals) r = -r;
  const QQData a = MakeQQData(f), b = MakeQQData(g);
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_NEAR(a.points[i].second, -b.points[8 - i].second, 1e-15);
    EXPECT_NEAR(a.points[i].first, -b.points[8 - i].first, 1e-12);
  }
}

TEST(QQTest, TwentyDrawsAgainstBoostQuantiles) {
  std::mt19937_64 rng(20);
  FitResult f;
  for (int i = 0; i < 20; ++i) f.residuals.push_back(0.3 * Normal(rng));
  std::vector<double> sorted = f.residuals;
  std::sort(sorted.begin(), sorted.end());
  double mean = 0, ss = 0;
  for (double r : sorted) mean += r / 20;
  for (double r : sorted) ss += (r - mean) * (r - mean);
  const double sd = std::sqrt(ss / 19);
  const boost::math::normal normal;
  const QQData qq = MakeQQData(f);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_NEAR(qq.points[i].first, boost::math::quantile(normal, (i + 0.5) / 20),
                1e-12);
    EXPECT_NEAR(qq.points[i].second, sorted[i] / sd, 1e-13);
  }
}

TEST(QQTest, Errors) {
  FitResult f;
  f.residuals = {1, 2};
  EXPECT_THROW(MakeQQData(f), std::invalid_argument);
  f.residuals = {0.5, 0.5, 0.5};
  EXPECT_THROW(MakeQQData(f), DegenerateError);
}

}  // namespace
}  // namespace tacs::stats
