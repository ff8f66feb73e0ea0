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

#ifndef TACS_SERIALIZE_HPP_
#define TACS_SERIALIZE_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "tacs/corpus_io.hpp"
#include "tacs/cs_metrics.hpp"
#include "tacs/regression.hpp"
#include "tacs/script_filter.hpp"
#include "tacs/token_lid.hpp"

namespace tacs {

using Json = nlohmann::json;

enum class Aggregation { kMacro, kMicro };

std::string_view ToString(Aggregation aggregation);

// Flat object of the six counts.
Json ToJson(const FilterReport& report);

// {classes, confusion, per_class{en,ta,na}{precision,recall,f1,support},
//  macro_f1, accuracy, total}
Json ToJson(const EvalReport& report);

Json ToJson(const LidConfig& config);
// Missing keys keep their defaults; unknown keys are ignored.
LidConfig LidConfigFromJson(const Json& json);

// {classes, feature_index, weights (row-major, classes x (features + 1)),
//  config}. Doubles are written in shortest round-trip form, so loading a
// saved model reproduces its weights bit for bit.
Json ToJson(const LidModel& model);
// Throws FormatError on schema violations.
LidModel LidModelFromJson(const Json& json);

// {model, outcome, n, df_residual, r_squared, rss, tss, degenerate,
//  coefficients: [{name, estimate, std_error, t, p}]}
Json ToJson(const stats::FitResult& fit);

// {f, df1, df2, p}
Json ToJson(const stats::AnovaResult& anova);

// {aggregation, switch_mode, groups: [...]}; the headline en_prop/ta_prop/
// na_prop fields follow `aggregation`, and both variants are nested under
// "macro" and "micro". Proportions are fractions.
Json Table1Json(std::span<const GroupSummary> groups, Aggregation aggregation,
                SwitchMode mode);

enum class BoxVariable { kEnProp, kSwitches };

// {variable, groups: [{sentiment, n, min, q1, median, q3, max, mean}]}
Json BoxplotJson(std::span<const GroupSummary> groups, BoxVariable variable);

// Header `id, sentiment, token_count, en_prop, ta_prop, na_prop,
// switches_strict, switches_collapse`; doubles printed with 17 significant
// digits. Utterances must carry a sentiment.
void WriteMetricsTsv(const TaggedCorpus& corpus, std::ostream& out);

// Reads WriteMetricsTsv output, taking switch_count from the column for
// `mode`. Throws FormatError naming the line.
std::vector<UtteranceMetrics> ReadMetricsTsv(std::istream& in, SwitchMode mode);

// Header `theoretical_quantile<TAB>standardized_residual`.
void WriteQQTsv(const stats::QQData& qq, std::ostream& out);

// Human-readable group summary: sentiment, n, EN%, TA%, NA%, switches. With
// `paper_rounding`, percentages get one decimal and switches two.
void WriteTable1Tsv(std::span<const GroupSummary> groups,
                    Aggregation aggregation, bool paper_rounding,
                    std::ostream& out);

}  // namespace tacs

#endif  // TACS_SERIALIZE_HPP_
