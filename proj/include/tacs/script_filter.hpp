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

#ifndef TACS_SCRIPT_FILTER_HPP_
#define TACS_SCRIPT_FILTER_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "tacs/corpus_io.hpp"

namespace tacs {

// Any code point in the Tamil block U+0B80..U+0BFF.
bool ContainsTamilScript(std::string_view text);

struct ScriptPartition {
  std::vector<Utterance> romanized;
  std::vector<Utterance> tamil_script;
};

ScriptPartition PartitionByScript(const std::vector<Utterance>& utterances);

inline bool IsAnalysisSentiment(Sentiment s) {
  return s == Sentiment::kPositive || s == Sentiment::kNegative ||
         s == Sentiment::kMixedFeelings;
}

// Keeps Positive, Negative and Mixed_feelings, in order.
std::vector<Utterance> SelectAnalysisSubset(
    const std::vector<Utterance>& utterances);

// The two exclusion counts are taken over the romanized part only, so
// analysis_subset == romanized - excluded_unknown_state - excluded_not_tamil.
struct FilterReport {
  std::size_t total = 0;
  std::size_t tamil_script = 0;
  std::size_t romanized = 0;
  std::size_t excluded_unknown_state = 0;
  std::size_t excluded_not_tamil = 0;
  std::size_t analysis_subset = 0;

  bool operator==(const FilterReport&) const = default;
};

FilterReport MakeFilterReport(const std::vector<Utterance>& utterances);

}  // namespace tacs

#endif  // TACS_SCRIPT_FILTER_HPP_
