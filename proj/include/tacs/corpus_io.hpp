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

#ifndef TACS_CORPUS_IO_HPP_
#define TACS_CORPUS_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tacs {

// Utterance-level sentiment categories of the source corpus.
enum class Sentiment {
  kPositive,
  kNegative,
  kMixedFeelings,
  kUnknownState,
  kNotTamil,
};

// Corpus spelling: "Positive", "Negative", "Mixed_feelings",
// "unknown_state", "not-Tamil".
std::string_view ToString(Sentiment sentiment);
std::optional<Sentiment> TryParseSentiment(std::string_view label);
// Throws FormatError "unknown sentiment label '<label>'".
Sentiment ParseSentiment(std::string_view label);

// Token language tags. The enumerator order is the class order used by the
// tagger and the confusion matrix.
enum class LangTag { kEn = 0, kTa = 1, kNa = 2 };

inline constexpr std::size_t kNumLangTags = 3;
inline constexpr LangTag kAllLangTags[kNumLangTags] = {
    LangTag::kEn, LangTag::kTa, LangTag::kNa};

std::string_view ToString(LangTag tag);
std::optional<LangTag> TryParseLangTag(std::string_view tag);
inline std::size_t Index(LangTag tag) { return static_cast<std::size_t>(tag); }

struct Utterance {
  std::size_t id = 0;
  std::string text;
  Sentiment sentiment = Sentiment::kPositive;

  bool operator==(const Utterance&) const = default;
};

struct TaggedUtterance {
  std::vector<std::string> tokens;
  std::vector<LangTag> tags;
  std::optional<Sentiment> sentiment;
  std::optional<std::size_t> id;

  std::size_t size() const { return tokens.size(); }
  bool operator==(const TaggedUtterance&) const = default;
};

struct TaggedCorpus {
  std::vector<TaggedUtterance> utterances;

  std::size_t size() const { return utterances.size(); }
  bool empty() const { return utterances.empty(); }
  bool operator==(const TaggedCorpus&) const = default;
};

// Reads the sentiment TSV: one `text<TAB>label` record per non-empty line,
// optional `text<TAB>category` header, LF or CRLF endings. Ids are assigned
// 0..n-1 in file order. Throws FormatError naming the 1-based line.
std::vector<Utterance> ParseDataset(std::istream& in);

// Writes the same layout ParseDataset reads, header included.
void WriteDataset(const std::vector<Utterance>& utterances, std::ostream& out);

// Reads token-tag CoNLL. Token lines are `token<TAB>tag`; blank lines end an
// utterance. Lines starting with '#' that contain no tab are comments;
// `# id = N` and `# sentiment = LABEL` attach metadata to the utterance that
// follows. Utterances with no token lines are dropped.
TaggedCorpus ParseConll(std::istream& in);

// Inverse of ParseConll. Each utterance is written as its metadata comments
// (when present), its token lines, and one blank line. Throws
// std::invalid_argument when an utterance violates the TaggedUtterance
// invariants (length mismatch, empty or whitespace-bearing token, no tokens).
void WriteConll(const TaggedCorpus& corpus, std::ostream& out);

// Throws std::invalid_argument naming the first violated invariant.
void CheckInvariants(const TaggedUtterance& utterance);

struct TrainValidationSplit {
  TaggedCorpus train;
  TaggedCorpus validation;
};

// Utterance-level split. Indices are shuffled by a Fisher-Yates pass driven
// by mt19937_64(seed); the last round(fraction * n) shuffled indices form
// the validation part. Both parts keep source order.
TrainValidationSplit SplitTrainValidation(const TaggedCorpus& corpus,
                                          double validation_fraction,
                                          std::uint64_t seed);

}  // namespace tacs

#endif  // TACS_CORPUS_IO_HPP_
