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

#ifndef TACS_TOKEN_LID_HPP_
#define TACS_TOKEN_LID_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tacs/corpus_io.hpp"

namespace tacs {

struct Token {
  std::string surface;
  std::size_t position = 0;

  bool operator==(const Token&) const = default;
};

// Splits on runs of Unicode whitespace. Case and punctuation are untouched.
std::vector<Token> Tokenize(std::string_view text);

// na for surfaces without a single letter (digits, punctuation, symbols,
// emoji); nullopt otherwise, leaving the decision to the classifier.
std::optional<LangTag> RuleTag(std::string_view surface);

struct LidConfig {
  int ngram_min = 1;
  int ngram_max = 4;
  int min_ngram_count = 2;
  double l2_penalty = 1e-4;
  double learning_rate = 0.5;
  int epochs = 200;
  std::uint64_t seed = 13;

  // Throws FormatError on out-of-range fields.
  void Validate() const;
  bool operator==(const LidConfig&) const = default;
};

// Boundary markers wrapped around every surface before n-gram extraction.
inline constexpr char32_t kWordStart = U'^';
inline constexpr char32_t kWordEnd = U'$';

using NgramCounts = std::map<std::string, int>;

// Character n-grams (over code points) of the lowercased, boundary-padded
// surface for every n in [ngram_min, ngram_max], with occurrence counts.
NgramCounts ExtractFeatures(std::string_view surface, const LidConfig& config);

using FeatureIndex = std::map<std::string, std::size_t>;

// Sparse (feature id, value) pairs sorted by id. N-grams missing from the
// index are dropped and the remaining counts are scaled to unit L2 norm.
// The bias input is implicit.
using SparseRow = std::vector<std::pair<std::size_t, double>>;

SparseRow Vectorize(std::string_view surface, const FeatureIndex& index,
                    const LidConfig& config);

// Multinomial logistic classifier over character n-grams. Weights are a
// row-major kNumLangTags x (num_features + 1) matrix; the last column is the
// bias. Rows follow LangTag order (en, ta, na).
class LidModel {
 public:
  // Throws FormatError if the index is not dense 0..F-1, the weight count
  // is not kNumLangTags * (F + 1), or a weight is not finite.
  LidModel(FeatureIndex feature_index, std::vector<double> weights,
           LidConfig config);

  const FeatureIndex& feature_index() const { return feature_index_; }
  const std::vector<double>& weights() const { return weights_; }
  const LidConfig& config() const { return config_; }
  std::size_t num_features() const { return feature_index_.size(); }

  std::array<double, kNumLangTags> Scores(std::string_view surface) const;
  // Classifier decision only; ties go to the earlier class in LangTag order.
  LangTag Classify(std::string_view surface) const;

  bool operator==(const LidModel&) const = default;

 private:
  FeatureIndex feature_index_;
  std::vector<double> weights_;
  LidConfig config_;
};

// Classifier inputs for every gold token that RuleTag leaves undecided.
struct TrainingProblem {
  FeatureIndex feature_index;
  std::vector<SparseRow> rows;
  std::vector<LangTag> labels;

  std::size_t num_weights() const {
    return kNumLangTags * (feature_index.size() + 1);
  }
};

// Collects classifier tokens, drops n-grams seen fewer than
// config.min_ngram_count times in total, and assigns feature ids in
// lexicographic n-gram order. Throws FormatError when a class has no
// training token.
TrainingProblem BuildTrainingProblem(const TaggedCorpus& corpus,
                                     const LidConfig& config);

// Mean cross-entropy plus (l2_penalty / 2) * ||W||^2 over non-bias weights.
// Fills `gradient` (resized to match) when non-null.
double Objective(const TrainingProblem& problem, std::span<const double> weights,
                 double l2_penalty, std::vector<double>* gradient);

// Initial weights: uniform in [-0.01, 0.01) from mt19937_64(config.seed).
std::vector<double> InitialWeights(std::size_t num_weights,
                                   const LidConfig& config);

// Upper bound on the objective's gradient Lipschitz constant is
// 1 + l2_penalty (unit-norm inputs plus a bias of 1, softmax Hessian bounded
// by 1/2), so full-batch descent decreases the objective monotonically for
// learning rates below this threshold.
double MonotoneLearningRateBound(double l2_penalty);

// Full-batch gradient descent for config.epochs steps. If `loss_history` is
// non-null it receives epochs + 1 values: the objective before each step and
// after the last one. Throws DegenerateError on a non-finite objective.
LidModel Train(const TaggedCorpus& corpus, const LidConfig& config,
               std::vector<double>* loss_history = nullptr);

// Tokenizes, applies RuleTag, and classifies the remaining tokens.
TaggedUtterance Predict(const LidModel& model, std::string_view text);

// Attaches sentiment and source id from `utterances` to externally produced
// tags. Throws AlignmentError on a count mismatch, naming the index.
TaggedCorpus ImportTags(const std::vector<Utterance>& utterances,
                        const TaggedCorpus& tags);

using ConfusionMatrix =
    std::array<std::array<std::size_t, kNumLangTags>, kNumLangTags>;

struct EvalReport {
  // Indexed [gold][predicted].
  ConfusionMatrix confusion{};
  std::array<double, kNumLangTags> precision{};
  std::array<double, kNumLangTags> recall{};
  std::array<double, kNumLangTags> f1{};
  double macro_f1 = 0.0;
  double accuracy = 0.0;
  std::size_t total = 0;
};

// Precision, recall and F1 are 0 when their denominators are 0.
EvalReport MakeEvalReport(const ConfusionMatrix& confusion);

// Throws AlignmentError unless the corpora agree in utterance count and in
// token count per utterance.
EvalReport Evaluate(const TaggedCorpus& predictions, const TaggedCorpus& gold);

}  // namespace tacs

#endif  // TACS_TOKEN_LID_HPP_
