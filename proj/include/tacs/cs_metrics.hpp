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

#ifndef TACS_CS_METRICS_HPP_
#define TACS_CS_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tacs/corpus_io.hpp"

namespace tacs {

enum class SwitchMode {
  // Boundaries whose two tags differ and are both non-na.
  kStrictBoundary,
  // Drop every na token first, then count differing neighbours.
  kCollapseNa,
};

// "strict_boundary" / "collapse_na".
std::string_view ToString(SwitchMode mode);

struct LanguageProportions {
  double en = 0.0;
  double ta = 0.0;
  double na = 0.0;
};

// count(tag) / token_count; na tokens stay in the denominator. Throws
// std::invalid_argument("empty utterance") for zero tokens.
LanguageProportions ComputeLanguageProportions(std::span<const LangTag> tags);

std::size_t CountSwitches(std::span<const LangTag> tags, SwitchMode mode);

struct UtteranceMetrics {
  std::optional<std::size_t> id;
  std::optional<Sentiment> sentiment;
  std::size_t token_count = 0;
  std::size_t en_tokens = 0;
  std::size_t ta_tokens = 0;
  std::size_t na_tokens = 0;
  double en_prop = 0.0;
  double ta_prop = 0.0;
  double na_prop = 0.0;
  std::size_t switch_count = 0;
  SwitchMode mode = SwitchMode::kStrictBoundary;

  bool operator==(const UtteranceMetrics&) const = default;
};

// Throws std::invalid_argument for an utterance without tokens.
UtteranceMetrics ComputeUtteranceMetrics(const TaggedUtterance& tagged,
                                         SwitchMode mode);

// Five-number summary plus mean, for boxplots.
struct BoxStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

// Linear interpolation between order statistics: position (n - 1) * p in
// the ascending sequence. `sorted` must be non-empty and ascending.
double InterpolatedQuantile(std::span<const double> sorted, double p);

BoxStats MakeBoxStats(std::vector<double> values);

struct GroupSummary {
  Sentiment sentiment = Sentiment::kPositive;
  std::size_t n = 0;
  // Macro: unweighted means of per-utterance proportions.
  double mean_en_prop = 0.0;
  double mean_ta_prop = 0.0;
  double mean_na_prop = 0.0;
  // Micro: pooled token counts of the group.
  double micro_en_prop = 0.0;
  double micro_ta_prop = 0.0;
  double micro_na_prop = 0.0;
  double mean_switches = 0.0;
  // Sample standard deviations (n - 1). Reported as 0 with sd_defined false
  // when n == 1.
  double sd_en_prop = 0.0;
  double sd_switches = 0.0;
  bool sd_defined = false;
  BoxStats en_prop_box;
  BoxStats switches_box;
};

// One row per analysis sentiment present, ordered Positive, Mixed_feelings,
// Negative. Records with other or missing sentiments are ignored. Every
// statistic is computed from sorted values, so results do not depend on
// input order.
std::vector<GroupSummary> SummarizeGroups(
    std::span<const UtteranceMetrics> metrics);

}  // namespace tacs

#endif  // TACS_CS_METRICS_HPP_
