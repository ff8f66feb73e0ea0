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

#include "tacs/script_filter.hpp"

#include "tacs/utf8.hpp"

namespace tacs {

bool ContainsTamilScript(std::string_view text) {
  // Tamil block is encoded as E0 AE 80 .. E0 AF BF; decode only when a
  // candidate lead byte shows up, which keeps the Latin-only path cheap.
  if (text.find('\xE0') == std::string_view::npos) return false;
  for (char32_t cp : utf8::Decode(text)) {
    if (cp >= 0x0B80 && cp <= 0x0BFF) return true;
  }
  return false;
}

ScriptPartition PartitionByScript(const std::vector<Utterance>& utterances) {
  ScriptPartition out;
  for (const Utterance& u : utterances) {
    (ContainsTamilScript(u.text) ? out.tamil_script : out.romanized)
        .push_back(u);
  }
  return out;
}

std::vector<Utterance> SelectAnalysisSubset(
    const std::vector<Utterance>& utterances) {
  std::vector<Utterance> out;
  for (const Utterance& u : utterances) {
    if (IsAnalysisSentiment(u.sentiment)) out.push_back(u);
  }
  return out;
}

FilterReport MakeFilterReport(const std::vector<Utterance>& utterances) {
  FilterReport report;
  for (const Utterance& u : utterances) {
    ++report.total;
    if (ContainsTamilScript(u.text)) {
      ++report.tamil_script;
      continue;
    }
    ++report.romanized;
    if (u.sentiment == Sentiment::kUnknownState) {
      ++report.excluded_unknown_state;
    } else if (u.sentiment == Sentiment::kNotTamil) {
      ++report.excluded_not_tamil;
    } else {
      ++report.analysis_subset;
    }
  }
  return report;
}

}  // namespace tacs
