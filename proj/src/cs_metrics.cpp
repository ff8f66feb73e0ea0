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

#include "tacs/cs_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tacs {

namespace {

double SortedMean(std::span<const double> sorted) {
  double sum = 0.0;
  for (double v : sorted) sum += v;
  return sum / static_cast<double>(sorted.size());
}

double SortedSd(std::span<const double> sorted, double mean) {
  if (sorted.size() < 2) return 0.0;
  double ss = 0.0;
  for (double v : sorted) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(sorted.size() - 1));
}

}  // namespace

std::string_view ToString(SwitchMode mode) {
  return mode == SwitchMode::kStrictBoundary ? "strict_boundary"
                                             : "collapse_na";
}

LanguageProportions ComputeLanguageProportions(std::span<const LangTag> tags) {
  if (tags.empty()) throw std::invalid_argument("empty utterance");
  std::size_t counts[kNumLangTags] = {};
  for (LangTag t : tags) ++counts[Index(t)];
  const auto n = static_cast<double>(tags.size());
  return {counts[0] / n, counts[1] / n, counts[2] / n};
}

std::size_t CountSwitches(std::span<const LangTag> tags, SwitchMode mode) {
  std::size_t switches = 0;
  if (mode == SwitchMode::kStrictBoundary) {
    for (std::size_t i = 1; i < tags.size(); ++i) {
      if (tags[i - 1] != LangTag::kNa && tags[i] != LangTag::kNa &&
          tags[i - 1] != tags[i]) {
        ++switches;
      }
    }
    return switches;
  }
  std::optional<LangTag> previous;
  for (LangTag t : tags) {
    if (t == LangTag::kNa) continue;
    if (previous && *previous != t) ++switches;
    previous = t;
  }
  return switches;
}

UtteranceMetrics ComputeUtteranceMetrics(const TaggedUtterance& tagged,
                                         SwitchMode mode) {
  const LanguageProportions props = ComputeLanguageProportions(tagged.tags);
  UtteranceMetrics m;
  m.id = tagged.id;
  m.sentiment = tagged.sentiment;
  m.token_count = tagged.tags.size();
  for (LangTag t : tagged.tags) {
    if (t == LangTag::kEn) ++m.en_tokens;
    if (t == LangTag::kTa) ++m.ta_tokens;
    if (t == LangTag::kNa) ++m.na_tokens;
  }
  m.en_prop = props.en;
  m.ta_prop = props.ta;
  m.na_prop = props.na;
  m.switch_count = CountSwitches(tagged.tags, mode);
  m.mode = mode;
  return m;
}

double InterpolatedQuantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BoxStats MakeBoxStats(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  BoxStats box;
  box.min = values.front();
  box.q1 = InterpolatedQuantile(values, 0.25);
  box.median = InterpolatedQuantile(values, 0.5);
  box.q3 = InterpolatedQuantile(values, 0.75);
  box.max = values.back();
  box.mean = SortedMean(values);
  return box;
}

std::vector<GroupSummary> SummarizeGroups(
    std::span<const UtteranceMetrics> metrics) {
  constexpr Sentiment kOrder[] = {Sentiment::kPositive,
                                  Sentiment::kMixedFeelings,
                                  Sentiment::kNegative};
  std::vector<GroupSummary> out;
  for (Sentiment sentiment : kOrder) {
    std::vector<double> en, ta, na, switches;
    std::size_t tokens = 0, en_tokens = 0, ta_tokens = 0, na_tokens = 0;
    for (const UtteranceMetrics& m : metrics) {
      if (m.sentiment != sentiment) continue;
      en.push_back(m.en_prop);
      ta.push_back(m.ta_prop);
      na.push_back(m.na_prop);
      switches.push_back(static_cast<double>(m.switch_count));
      tokens += m.token_count;
      en_tokens += m.en_tokens;
      ta_tokens += m.ta_tokens;
      na_tokens += m.na_tokens;
    }
    if (en.empty()) continue;
    for (auto* v : {&en, &ta, &na, &switches}) std::sort(v->begin(), v->end());

    GroupSummary g;
    g.sentiment = sentiment;
    g.n = en.size();
    g.mean_en_prop = SortedMean(en);
    g.mean_ta_prop = SortedMean(ta);
    g.mean_na_prop = SortedMean(na);
    const auto pooled = static_cast<double>(tokens);
    g.micro_en_prop = en_tokens / pooled;
    g.micro_ta_prop = ta_tokens / pooled;
    g.micro_na_prop = na_tokens / pooled;
    g.mean_switches = SortedMean(switches);
    g.sd_defined = g.n > 1;
    g.sd_en_prop = SortedSd(en, g.mean_en_prop);
    g.sd_switches = SortedSd(switches, g.mean_switches);
    g.en_prop_box = MakeBoxStats(en);
    g.switches_box = MakeBoxStats(switches);
    out.push_back(g);
  }
  return out;
}

}  // namespace tacs
