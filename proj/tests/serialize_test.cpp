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

#include "tacs/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "tacs/error.hpp"

namespace tacs {
namespace {

TaggedCorpus RandomAnalysisCorpus(std::uint64_t seed, std::size_t n) {
  const Sentiment labels[] = {Sentiment::kPositive, Sentiment::kMixedFeelings,
                              Sentiment::kNegative};
  std::mt19937_64 rng(seed);
  TaggedCorpus corpus;
  for (std::size_t i = 0; i < n; ++i) {
    TaggedUtterance u;
    for (std::size_t t = 1 + rng() % 12; t > 0; --t) {
      u.tokens.push_back("w" + std::to_string(rng() % 50));
      u.tags.push_back(kAllLangTags[rng() % 3]);
    }
    u.sentiment = labels[rng() % 3];
    u.id = i * 3;
    corpus.utterances.push_back(std::move(u));
  }
  return corpus;
}

TEST(LidModelJsonTest, RoundTripPreservesPredictions) {
  TaggedCorpus corpus;
  for (int i = 0; i < 10; ++i) {
    TaggedUtterance u;
    u.tokens = {"super", "padam", "mass", "da"};
    u.tags = {LangTag::kEn, LangTag::kTa, LangTag::kNa, LangTag::kTa};
    corpus.utterances.push_back(u);
  }
  LidConfig config;
  config.epochs = 30;
  const LidModel model = Train(corpus, config);
  const Json json = ToJson(model);
  EXPECT_EQ(json["classes"], Json::array({"en", "ta", "na"}));
  const LidModel back = LidModelFromJson(Json::parse(json.dump()));
  EXPECT_EQ(back, model);
  for (const char* w : {"super", "padam", "semma", "massu", "x"}) {
    EXPECT_EQ(back.Scores(w), model.Scores(w)) << w;
  }
}

TEST(LidModelJsonTest, RejectsBrokenDocuments) {
  const LidModel model({{"^a", 0}}, std::vector<double>(6, 0.0), LidConfig{});
  Json json = ToJson(model);
  Json missing = json;
  missing.erase("weights");
  EXPECT_THROW(LidModelFromJson(missing), FormatError);
  Json short_weights = json;
  short_weights["weights"].erase(0);
  EXPECT_THROW(LidModelFromJson(short_weights), FormatError);
  Json classes = json;
  classes["classes"] = Json::array({"ta", "en", "na"});
  EXPECT_THROW(LidModelFromJson(classes), FormatError);
}

TEST(LidConfigJsonTest, RoundTrip) {
  LidConfig c;
  c.ngram_max = 5;
  c.l2_penalty = 0.25;
  c.seed = 99;
  EXPECT_EQ(LidConfigFromJson(ToJson(c)), c);
}

TEST(MetricsTsvTest, RoundTripMatchesDirectComputation) {
  const TaggedCorpus corpus = RandomAnalysisCorpus(4, 80);
  std::stringstream s;
  WriteMetricsTsv(corpus, s);
  for (SwitchMode mode : {SwitchMode::kStrictBoundary, SwitchMode::kCollapseNa}) {
    std::istringstream in(s.str());
    const auto rows = ReadMetricsTsv(in, mode);
    ASSERT_EQ(rows.size(), corpus.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_EQ(rows[i], ComputeUtteranceMetrics(corpus.utterances[i], mode)) << i;
    }
  }
}

TEST(MetricsTsvTest, Errors) {
  std::istringstream bad_cols("1\tPositive\t3\n");
  EXPECT_THROW(ReadMetricsTsv(bad_cols, SwitchMode::kStrictBoundary), FormatError);
  std::istringstream bad_label("1\tHappy\t3\t1\t0\t0\t0\t0\n");
  EXPECT_THROW(ReadMetricsTsv(bad_label, SwitchMode::kStrictBoundary), FormatError);
  std::istringstream bad_num("1\tPositive\tx\t1\t0\t0\t0\t0\n");
  EXPECT_THROW(ReadMetricsTsv(bad_num, SwitchMode::kStrictBoundary), FormatError);
}

TEST(FitJsonTest, Shape) {
  const TaggedCorpus corpus = RandomAnalysisCorpus(5, 60);
  std::vector<UtteranceMetrics> m;
  for (const auto& u : corpus.utterances) {
    m.push_back(ComputeUtteranceMetrics(u, SwitchMode::kStrictBoundary));
  }
  const auto fit = stats::FitModel(m, stats::ModelSpec::Model1b());
  const Json j = ToJson(fit);
  EXPECT_EQ(j["model"], "1b");
  EXPECT_EQ(j["outcome"], "en_prop");
  EXPECT_EQ(j["n"], 60);
  EXPECT_EQ(j["df_residual"], 54);
  ASSERT_EQ(j["coefficients"].size(), 6u);
  EXPECT_EQ(j["coefficients"][0]["name"], "(Intercept)");
  EXPECT_EQ(j["coefficients"][5]["name"], "Negative:token_count");
  for (const auto& c : j["coefficients"]) {
    for (const char* key : {"estimate", "std_error", "t", "p"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
  }
}

TEST(FitJsonTest, DegenerateTIsNull) {
  stats::DesignMatrix d;
  d.values = stats::Matrix(3, 1, 1.0);
  d.column_names = {"(Intercept)"};
  const std::vector<double> y = {2, 2, 2};
  const auto fit = stats::CoefficientInference(stats::FitOls(d, y), d);
  const Json j = ToJson(fit);
  EXPECT_TRUE(j["degenerate"].get<bool>());
  EXPECT_TRUE(j["coefficients"][0]["t"].is_null());
  EXPECT_EQ(j["coefficients"][0]["p"], 0.0);
}

TEST(EvalJsonTest, Shape) {
  const ConfusionMatrix c = {{{2, 1, 0}, {0, 3, 0}, {1, 0, 4}}};
  const Json j = ToJson(MakeEvalReport(c));
  EXPECT_EQ(j["total"], 11);
  EXPECT_EQ(j["confusion"][0], Json::array({2, 1, 0}));
  EXPECT_EQ(j["per_class"]["en"]["support"], 3);
  EXPECT_DOUBLE_EQ(j["per_class"]["ta"]["precision"].get<double>(), 0.75);
  EXPECT_DOUBLE_EQ(j["accuracy"].get<double>(), 9.0 / 11);
}

TEST(Table1Test, JsonAndRoundedTsv) {
  const TaggedCorpus corpus = RandomAnalysisCorpus(6, 90);
  std::vector<UtteranceMetrics> m;
  for (const auto& u : corpus.utterances) {
    m.push_back(ComputeUtteranceMetrics(u, SwitchMode::kCollapseNa));
  }
  const auto groups = SummarizeGroups(m);
  const Json macro = Table1Json(groups, Aggregation::kMacro, SwitchMode::kCollapseNa);
  EXPECT_EQ(macro["aggregation"], "macro");
  EXPECT_EQ(macro["switch_mode"], "collapse_na");
  ASSERT_EQ(macro["groups"].size(), 3u);
  EXPECT_EQ(macro["groups"][0]["sentiment"], "Positive");
  EXPECT_EQ(macro["groups"][0]["en_prop"].get<double>(), groups[0].mean_en_prop);
  const Json micro = Table1Json(groups, Aggregation::kMicro, SwitchMode::kCollapseNa);
  EXPECT_EQ(micro["groups"][1]["en_prop"].get<double>(), groups[1].micro_en_prop);

  std::ostringstream tsv;
  WriteTable1Tsv(groups, Aggregation::kMacro, true, tsv);
  std::istringstream lines(tsv.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  char expected[64];
  std::snprintf(expected, sizeof expected, "%.1f", 100.0 * groups[0].mean_en_prop);
  EXPECT_NE(first.find(expected), std::string::npos) << first;
  std::snprintf(expected, sizeof expected, "%.2f", groups[0].mean_switches);
  EXPECT_NE(first.find(expected), std::string::npos) << first;
}

TEST(BoxplotTest, Shape) {
  const TaggedCorpus corpus = RandomAnalysisCorpus(7, 30);
  std::vector<UtteranceMetrics> m;
  for (const auto& u : corpus.utterances) {
    m.push_back(ComputeUtteranceMetrics(u, SwitchMode::kStrictBoundary));
  }
  const auto groups = SummarizeGroups(m);
  const Json j = BoxplotJson(groups, BoxVariable::kSwitches);
  EXPECT_EQ(j["variable"], "switches");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const Json& g = j["groups"][i];
    EXPECT_LE(g["min"].get<double>(), g["q1"].get<double>());
    EXPECT_LE(g["q1"].get<double>(), g["median"].get<double>());
    EXPECT_LE(g["median"].get<double>(), g["q3"].get<double>());
    EXPECT_LE(g["q3"].get<double>(), g["max"].get<double>());
    EXPECT_EQ(g["median"].get<double>(), groups[i].switches_box.median);
  }
}

TEST(QQTsvTest, Header) {
  stats::QQData qq;
  qq.points = {{-1.0, -0.5}, {1.0, 0.5}};
  std::ostringstream out;
  WriteQQTsv(qq, out);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "theoretical_quantile\tstandardized_residual");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

}  // namespace
}  // namespace tacs
