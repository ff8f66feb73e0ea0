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

#ifndef TACS_PIPELINE_HPP_
#define TACS_PIPELINE_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "tacs/corpus_io.hpp"
#include "tacs/cs_metrics.hpp"
#include "tacs/regression.hpp"
#include "tacs/script_filter.hpp"
#include "tacs/serialize.hpp"
#include "tacs/token_lid.hpp"

namespace tacs {

namespace fs = std::filesystem;

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // usage, I/O, anything unclassified
inline constexpr int kExitFormat = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitAlignment = 4;

// Maps the current exception (call inside a catch block) to an exit status.
int ExitStatusForCurrentException();

std::vector<Utterance> LoadDataset(const fs::path& path);
TaggedCorpus LoadConll(const fs::path& path);
LidModel LoadModel(const fs::path& path);

// Where token tags come from. Exactly one source may be set.
struct TagSource {
  std::optional<fs::path> model;          // saved LidModel
  std::optional<fs::path> external_tags;  // CoNLL produced elsewhere
  std::optional<fs::path> gold;           // train on the gold split first
  LidConfig lid;
  double split = 0.2;
  std::uint64_t seed = 13;

  // Throws std::invalid_argument unless exactly one source is set.
  void Validate() const;
};

// Writes filter_report.json, romanized.tsv and tamil_script.tsv.
FilterReport RunFilter(const fs::path& input, const fs::path& out_dir);

struct TrainOutcome {
  LidModel model;
  EvalReport validation;
  std::size_t train_utterances = 0;
  std::size_t validation_utterances = 0;
};

// Splits `corpus`, trains on the train part and evaluates on the validation
// part. Throws FormatError if the validation part is empty.
TrainOutcome TrainAndEvaluate(const TaggedCorpus& corpus, const LidConfig& lid,
                              double split, std::uint64_t seed);

// Writes model.json and eval_report.json.
TrainOutcome RunTrain(const fs::path& gold, const LidConfig& lid, double split,
                      std::uint64_t seed, const fs::path& out_dir);

// Tags the romanized analysis subset of `dataset`. External tags may cover
// either the whole romanized part or just the analysis subset; anything else
// is an AlignmentError.
TaggedCorpus TagAnalysisSubset(const std::vector<Utterance>& dataset,
                               const TagSource& source);

// Writes tagged.conll.
TaggedCorpus RunTag(const fs::path& input, const TagSource& source,
                    const fs::path& out_dir);

struct AnalysisOptions {
  SwitchMode switch_mode = SwitchMode::kStrictBoundary;
  Aggregation aggregation = Aggregation::kMacro;
  bool paper_rounding = false;
};

inline constexpr std::array<const char*, 4> kModelNames = {"1a", "1b", "2a",
                                                           "2b"};

struct AnalysisBundle {
  TaggedCorpus corpus;
  std::vector<UtteranceMetrics> metrics;
  std::vector<GroupSummary> groups;
  // Models 1a, 1b, 2a, 2b.
  std::array<stats::FitResult, 4> fits;
  // 1a vs 1b, 2a vs 2b.
  std::array<stats::AnovaResult, 2> anova;
  std::array<stats::QQData, 4> qq;
};

// Every utterance needs a sentiment among the three analysis classes
// (FormatError otherwise). Utterances without tokens are skipped with a note
// on stderr; an empty result is a DegenerateError.
AnalysisBundle Analyze(const TaggedCorpus& corpus, SwitchMode mode);

// Writes metrics.tsv, table1.json, table1.tsv, boxplot_en.json,
// boxplot_switches.json, model_{1a,1b,2a,2b}.json, anova_1.json,
// anova_2.json and qq_{1a,1b,2a,2b}.tsv.
void WriteAnalysisBundle(const AnalysisBundle& bundle,
                         const AnalysisOptions& options,
                         const fs::path& out_dir);

}  // namespace tacs

#endif  // TACS_PIPELINE_HPP_
