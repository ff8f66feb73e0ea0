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

#include "tacs/token_lid.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "rng.hpp"
#include "tacs/error.hpp"
#include "tacs/utf8.hpp"

namespace tacs {

namespace {

std::size_t Cols(std::size_t num_features) { return num_features + 1; }

std::array<double, kNumLangTags> LinearScores(std::span<const double> weights,
                                              std::size_t num_features,
                                              const SparseRow& row) {
  const std::size_t cols = Cols(num_features);
  std::array<double, kNumLangTags> scores{};
  for (std::size_t k = 0; k < kNumLangTags; ++k) {
    const double* w = weights.data() + k * cols;
    double s = w[num_features];
    for (const auto& [j, v] : row) s += w[j] * v;
    scores[k] = s;
  }
  return scores;
}

LangTag Argmax(const std::array<double, kNumLangTags>& scores) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < kNumLangTags; ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return static_cast<LangTag>(best);
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t begin = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t at = pos;
    if (utf8::IsWhitespace(utf8::Next(text, &pos))) {
      if (at > begin) {
        tokens.push_back(
            Token{std::string(text.substr(begin, at - begin)), tokens.size()});
      }
      begin = pos;
    }
  }
  if (pos > begin) {
    tokens.push_back(Token{std::string(text.substr(begin)), tokens.size()});
  }
  return tokens;
}

std::optional<LangTag> RuleTag(std::string_view surface) {
  for (char32_t cp : utf8::Decode(surface)) {
    if (utf8::IsLetter(cp)) return std::nullopt;
  }
  return LangTag::kNa;
}

void LidConfig::Validate() const {
  if (ngram_min < 1) throw FormatError("ngram_min must be >= 1");
  if (ngram_max < ngram_min) throw FormatError("ngram_max must be >= ngram_min");
  if (min_ngram_count < 1) throw FormatError("min_ngram_count must be >= 1");
  if (!(l2_penalty >= 0.0) || !std::isfinite(l2_penalty)) {
    throw FormatError("l2_penalty must be a non-negative number");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw FormatError("learning_rate must be positive");
  }
  if (epochs < 1) throw FormatError("epochs must be positive");
}

NgramCounts ExtractFeatures(std::string_view surface, const LidConfig& config) {
  std::u32string padded;
  padded.push_back(kWordStart);
  for (char32_t cp : utf8::Decode(surface)) padded.push_back(utf8::ToLower(cp));
  padded.push_back(kWordEnd);

  NgramCounts counts;
  for (int n = config.ngram_min; n <= config.ngram_max; ++n) {
    const auto len = static_cast<std::size_t>(n);
    if (len > padded.size()) break;
    for (std::size_t i = 0; i + len <= padded.size(); ++i) {
      ++counts[utf8::Encode(std::u32string_view(padded).substr(i, len))];
    }
  }
  return counts;
}

SparseRow Vectorize(std::string_view surface, const FeatureIndex& index,
                    const LidConfig& config) {
  SparseRow row;
  double norm2 = 0.0;
  for (const auto& [gram, count] : ExtractFeatures(surface, config)) {
    const auto it = index.find(gram);
    if (it == index.end()) continue;
    row.emplace_back(it->second, static_cast<double>(count));
    norm2 += static_cast<double>(count) * count;
  }
  if (norm2 > 0.0) {
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& entry : row) entry.second *= inv;
  }
  std::sort(row.begin(), row.end());
  return row;
}

LidModel::LidModel(FeatureIndex feature_index, std::vector<double> weights,
                   LidConfig config)
    : feature_index_(std::move(feature_index)),
      weights_(std::move(weights)),
      config_(config) {
  const std::size_t f = feature_index_.size();
  std::vector<bool> seen(f, false);
  for (const auto& [gram, id] : feature_index_) {
    if (id >= f || seen[id]) {
      throw FormatError("feature ids are not dense 0.." + std::to_string(f) +
                        "-1 (n-gram '" + gram + "')");
    }
    seen[id] = true;
  }
  if (weights_.size() != kNumLangTags * Cols(f)) {
    throw FormatError("expected " + std::to_string(kNumLangTags * Cols(f)) +
                      " weights, got " + std::to_string(weights_.size()));
  }
  for (double w : weights_) {
    if (!std::isfinite(w)) throw FormatError("non-finite model weight");
  }
}

std::array<double, kNumLangTags> LidModel::Scores(
    std::string_view surface) const {
  return LinearScores(weights_, num_features(),
                      Vectorize(surface, feature_index_, config_));
}

LangTag LidModel::Classify(std::string_view surface) const {
  return Argmax(Scores(surface));
}

TrainingProblem BuildTrainingProblem(const TaggedCorpus& corpus,
                                     const LidConfig& config) {
  config.Validate();
  std::vector<const std::string*> surfaces;
  TrainingProblem problem;
  std::array<std::size_t, kNumLangTags> class_counts{};
  for (const TaggedUtterance& u : corpus.utterances) {
    if (u.tokens.size() != u.tags.size()) {
      throw FormatError("token/tag count mismatch in training corpus");
    }
    for (std::size_t i = 0; i < u.tokens.size(); ++i) {
      if (RuleTag(u.tokens[i])) continue;
      surfaces.push_back(&u.tokens[i]);
      problem.labels.push_back(u.tags[i]);
      ++class_counts[Index(u.tags[i])];
    }
  }
  // na is optional here: most na tokens are resolved by RuleTag.
  for (LangTag tag : {LangTag::kEn, LangTag::kTa}) {
    if (class_counts[Index(tag)] == 0) {
      throw FormatError("training data has no '" + std::string(ToString(tag)) +
                        "' tokens among classifier tokens");
    }
  }

  NgramCounts totals;
  for (const std::string* s : surfaces) {
    for (const auto& [gram, count] : ExtractFeatures(*s, config)) {
      totals[gram] += count;
    }
  }
  for (const auto& [gram, count] : totals) {
    if (count >= config.min_ngram_count) {
      problem.feature_index.emplace(gram, problem.feature_index.size());
    }
  }
  problem.rows.reserve(surfaces.size());
  for (const std::string* s : surfaces) {
    problem.rows.push_back(Vectorize(*s, problem.feature_index, config));
  }
  return problem;
}

double Objective(const TrainingProblem& problem, std::span<const double> weights,
                 double l2_penalty, std::vector<double>* gradient) {
  const std::size_t f = problem.feature_index.size();
  const std::size_t cols = Cols(f);
  if (weights.size() != kNumLangTags * cols) {
    throw std::invalid_argument("weight vector has the wrong size");
  }
  if (gradient) gradient->assign(weights.size(), 0.0);

  const std::size_t n = problem.rows.size();
  const double inv_n = n > 0 ? 1.0 / static_cast<double>(n) : 0.0;
  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const SparseRow& row = problem.rows[i];
    const auto scores = LinearScores(weights, f, row);
    const double max = *std::max_element(scores.begin(), scores.end());
    double sum = 0.0;
    std::array<double, kNumLangTags> prob{};
    for (std::size_t k = 0; k < kNumLangTags; ++k) {
      prob[k] = std::exp(scores[k] - max);
      sum += prob[k];
    }
    const std::size_t label = Index(problem.labels[i]);
    loss += std::log(sum) - (scores[label] - max);
    if (!gradient) continue;
    for (std::size_t k = 0; k < kNumLangTags; ++k) {
      const double residual =
          (prob[k] / sum - (k == label ? 1.0 : 0.0)) * inv_n;
      double* g = gradient->data() + k * cols;
      for (const auto& [j, v] : row) g[j] += residual * v;
      g[f] += residual;
    }
  }
  loss *= inv_n;

  double penalty = 0.0;
  for (std::size_t k = 0; k < kNumLangTags; ++k) {
    for (std::size_t j = 0; j < f; ++j) {
      const double w = weights[k * cols + j];
      penalty += w * w;
      if (gradient) (*gradient)[k * cols + j] += l2_penalty * w;
    }
  }
  return loss + 0.5 * l2_penalty * penalty;
}

std::vector<double> InitialWeights(std::size_t num_weights,
                                   const LidConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<double> weights(num_weights);
  for (double& w : weights) w = 0.02 * internal::UniformUnit(rng) - 0.01;
  return weights;
}

double MonotoneLearningRateBound(double l2_penalty) {
  return 2.0 / (1.0 + l2_penalty);
}

LidModel Train(const TaggedCorpus& corpus, const LidConfig& config,
               std::vector<double>* loss_history) {
  TrainingProblem problem = BuildTrainingProblem(corpus, config);
  std::vector<double> weights =
      InitialWeights(problem.num_weights(), config);
  std::vector<double> gradient;
  if (loss_history) loss_history->clear();

  auto check = [](double loss, int epoch) {
    if (!std::isfinite(loss)) {
      throw DegenerateError("non-finite training loss at epoch " +
                            std::to_string(epoch));
    }
  };
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const double loss =
        Objective(problem, weights, config.l2_penalty, &gradient);
    check(loss, epoch);
    if (loss_history) loss_history->push_back(loss);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      weights[i] -= config.learning_rate * gradient[i];
    }
  }
  const double final_loss =
      Objective(problem, weights, config.l2_penalty, nullptr);
  check(final_loss, config.epochs);
  if (loss_history) loss_history->push_back(final_loss);

  return LidModel(std::move(problem.feature_index), std::move(weights),
                  config);
}

TaggedUtterance Predict(const LidModel& model, std::string_view text) {
  TaggedUtterance out;
  for (Token& token : Tokenize(text)) {
    const auto ruled = RuleTag(token.surface);
    out.tags.push_back(ruled ? *ruled : model.Classify(token.surface));
    out.tokens.push_back(std::move(token.surface));
  }
  return out;
}

TaggedCorpus ImportTags(const std::vector<Utterance>& utterances,
                        const TaggedCorpus& tags) {
  if (utterances.size() != tags.size()) {
    throw AlignmentError("utterance count mismatch: " +
                         std::to_string(tags.size()) + " tagged vs " +
                         std::to_string(utterances.size()) + " utterances");
  }
  TaggedCorpus merged;
  merged.utterances.reserve(tags.size());
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const TaggedUtterance& tagged = tags.utterances[i];
    if (tagged.tokens.size() != tagged.tags.size() ||
        tagged.tokens.size() != Tokenize(utterances[i].text).size()) {
      throw AlignmentError("token count mismatch at utterance " +
                           std::to_string(i));
    }
    TaggedUtterance u = tagged;
    u.sentiment = utterances[i].sentiment;
    u.id = utterances[i].id;
    merged.utterances.push_back(std::move(u));
  }
  return merged;
}

EvalReport MakeEvalReport(const ConfusionMatrix& confusion) {
  EvalReport report;
  report.confusion = confusion;
  std::size_t correct = 0;
  for (std::size_t k = 0; k < kNumLangTags; ++k) {
    std::size_t predicted = 0;
    std::size_t gold = 0;
    for (std::size_t j = 0; j < kNumLangTags; ++j) {
      predicted += confusion[j][k];
      gold += confusion[k][j];
    }
    report.total += gold;
    const std::size_t tp = confusion[k][k];
    correct += tp;
    const double p = predicted ? static_cast<double>(tp) / predicted : 0.0;
    const double r = gold ? static_cast<double>(tp) / gold : 0.0;
    report.precision[k] = p;
    report.recall[k] = r;
    report.f1[k] = p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
  }
  report.macro_f1 = (report.f1[0] + report.f1[1] + report.f1[2]) / 3.0;
  report.accuracy =
      report.total ? static_cast<double>(correct) / report.total : 0.0;
  return report;
}

EvalReport Evaluate(const TaggedCorpus& predictions, const TaggedCorpus& gold) {
  if (predictions.size() != gold.size()) {
    throw AlignmentError("utterance count mismatch: " +
                         std::to_string(predictions.size()) +
                         " predicted vs " + std::to_string(gold.size()) +
                         " gold");
  }
  ConfusionMatrix confusion{};
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto& p = predictions.utterances[i];
    const auto& g = gold.utterances[i];
    if (p.tags.size() != g.tags.size()) {
      throw AlignmentError("token count mismatch at utterance " +
                           std::to_string(i));
    }
    for (std::size_t t = 0; t < g.tags.size(); ++t) {
      ++confusion[Index(g.tags[t])][Index(p.tags[t])];
    }
  }
  return MakeEvalReport(confusion);
}

}  // namespace tacs
