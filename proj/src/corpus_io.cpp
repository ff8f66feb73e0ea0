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

#include "tacs/corpus_io.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "rng.hpp"
#include "tacs/error.hpp"
#include "tacs/utf8.hpp"

namespace tacs {

namespace {

constexpr std::string_view kSentimentNames[] = {
    "Positive", "Negative", "Mixed_feelings", "unknown_state", "not-Tamil"};
constexpr std::string_view kTagNames[] = {"en", "ta", "na"};
constexpr std::string_view kBom = "\xEF\xBB\xBF";

// Reads one line, dropping the terminator and a trailing '\r'.
bool ReadLine(std::istream& in, std::string* line) {
  if (!std::getline(in, *line)) return false;
  if (!line->empty() && line->back() == '\r') line->pop_back();
  return true;
}

void StripBom(std::string* line) {
  if (line->starts_with(kBom)) line->erase(0, kBom.size());
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

bool HasWhitespace(std::string_view s) {
  for (char32_t cp : utf8::Decode(s)) {
    if (utf8::IsWhitespace(cp)) return true;
  }
  return false;
}

std::string AtLine(std::size_t line_no) {
  return " at line " + std::to_string(line_no);
}

}  // namespace

std::string_view ToString(Sentiment sentiment) {
  return kSentimentNames[static_cast<std::size_t>(sentiment)];
}

std::optional<Sentiment> TryParseSentiment(std::string_view label) {
  for (std::size_t i = 0; i < std::size(kSentimentNames); ++i) {
    if (kSentimentNames[i] == label) return static_cast<Sentiment>(i);
  }
  return std::nullopt;
}

Sentiment ParseSentiment(std::string_view label) {
  if (auto parsed = TryParseSentiment(label)) return *parsed;
  throw FormatError("unknown sentiment label '" + std::string(label) + "'");
}

std::string_view ToString(LangTag tag) { return kTagNames[Index(tag)]; }

std::optional<LangTag> TryParseLangTag(std::string_view tag) {
  for (std::size_t i = 0; i < std::size(kTagNames); ++i) {
    if (kTagNames[i] == tag) return static_cast<LangTag>(i);
  }
  return std::nullopt;
}

std::vector<Utterance> ParseDataset(std::istream& in) {
  std::vector<Utterance> utterances;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (line_no == 1) StripBom(&line);
    if (Trim(line).empty()) continue;
    const auto tab = line.find('\t');
    const auto fields =
        tab == std::string::npos
            ? 1
            : 1 + std::count(line.begin(), line.end(), '\t');
    if (fields != 2) {
      throw FormatError("expected 2 tab-separated fields, found " +
                        std::to_string(fields) + AtLine(line_no));
    }
    const std::string_view view(line);
    const std::string_view text = Trim(view.substr(0, tab));
    const std::string_view label = Trim(view.substr(tab + 1));
    if (!seen_data) {
      seen_data = true;
      if (text == "text" && label == "category") continue;
    }
    if (text.empty()) throw FormatError("empty utterance text" + AtLine(line_no));
    const auto sentiment = TryParseSentiment(label);
    if (!sentiment) {
      throw FormatError("unknown sentiment label '" + std::string(label) + "'" +
                        AtLine(line_no));
    }
    utterances.push_back(
        Utterance{utterances.size(), std::string(text), *sentiment});
  }
  if (in.bad()) throw std::runtime_error("read error in dataset stream");
  return utterances;
}

void WriteDataset(const std::vector<Utterance>& utterances, std::ostream& out) {
  out << "text\tcategory\n";
  for (const Utterance& u : utterances) {
    out << u.text << '\t' << ToString(u.sentiment) << '\n';
  }
}

TaggedCorpus ParseConll(std::istream& in) {
  TaggedCorpus corpus;
  TaggedUtterance current;
  auto flush = [&] {
    if (!current.tokens.empty()) corpus.utterances.push_back(std::move(current));
    current = TaggedUtterance{};
  };

  std::string line;
  std::size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (line_no == 1) StripBom(&line);
    if (Trim(line).empty()) {
      flush();
      continue;
    }
    const auto tab = line.find('\t');
    if (line.front() == '#' && tab == std::string::npos) {
      const std::string_view body = Trim(std::string_view(line).substr(1));
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      const std::string_view key = Trim(body.substr(0, eq));
      const std::string_view value = Trim(body.substr(eq + 1));
      if (key == "sentiment") {
        const auto sentiment = TryParseSentiment(value);
        if (!sentiment) {
          throw FormatError("unknown sentiment label '" + std::string(value) +
                            "'" + AtLine(line_no));
        }
        current.sentiment = *sentiment;
      } else if (key == "id") {
        std::size_t id = 0;
        if (value.empty() ||
            !std::all_of(value.begin(), value.end(),
                         [](char c) { return c >= '0' && c <= '9'; })) {
          throw FormatError("invalid utterance id '" + std::string(value) +
                            "'" + AtLine(line_no));
        }
        for (char c : value) id = id * 10 + static_cast<std::size_t>(c - '0');
        current.id = id;
      }
      continue;
    }
    if (tab == std::string::npos) {
      throw FormatError("token line without tab" + AtLine(line_no));
    }
    if (line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError("expected token<TAB>tag, found extra tab" +
                        AtLine(line_no));
    }
    const std::string_view view(line);
    const std::string_view token = view.substr(0, tab);
    const std::string_view tag_name = view.substr(tab + 1);
    if (token.empty()) throw FormatError("empty token" + AtLine(line_no));
    if (HasWhitespace(token)) {
      throw FormatError("token contains whitespace" + AtLine(line_no));
    }
    const auto tag = TryParseLangTag(tag_name);
    if (!tag) {
      throw FormatError("unknown tag '" + std::string(tag_name) + "'" +
                        AtLine(line_no));
    }
    current.tokens.emplace_back(token);
    current.tags.push_back(*tag);
  }
  if (in.bad()) throw std::runtime_error("read error in CoNLL stream");
  flush();
  return corpus;
}

void CheckInvariants(const TaggedUtterance& utterance) {
  if (utterance.tokens.size() != utterance.tags.size()) {
    throw std::invalid_argument("token/tag count mismatch");
  }
  if (utterance.tokens.empty()) {
    throw std::invalid_argument("utterance has no tokens");
  }
  for (const std::string& token : utterance.tokens) {
    if (token.empty()) throw std::invalid_argument("empty token");
    if (HasWhitespace(token)) {
      throw std::invalid_argument("token '" + token + "' contains whitespace");
    }
  }
}

void WriteConll(const TaggedCorpus& corpus, std::ostream& out) {
  for (const TaggedUtterance& u : corpus.utterances) {
    CheckInvariants(u);
    if (u.id) out << "# id = " << *u.id << '\n';
    if (u.sentiment) out << "# sentiment = " << ToString(*u.sentiment) << '\n';
    for (std::size_t i = 0; i < u.tokens.size(); ++i) {
      out << u.tokens[i] << '\t' << ToString(u.tags[i]) << '\n';
    }
    out << '\n';
  }
}

TrainValidationSplit SplitTrainValidation(const TaggedCorpus& corpus,
                                          double validation_fraction,
                                          std::uint64_t seed) {
  if (!(validation_fraction > 0.0 && validation_fraction < 1.0)) {
    throw FormatError("validation fraction must lie in (0, 1), got " +
                      std::to_string(validation_fraction));
  }
  if (corpus.empty()) throw std::invalid_argument("cannot split an empty corpus");

  const std::size_t n = corpus.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[internal::UniformBelow(rng, i + 1)]);
  }

  const auto n_validation = static_cast<std::size_t>(
      std::llround(validation_fraction * static_cast<double>(n)));
  const auto cut = order.begin() + static_cast<std::ptrdiff_t>(n - n_validation);
  std::sort(order.begin(), cut);
  std::sort(cut, order.end());

  TrainValidationSplit split;
  for (auto it = order.begin(); it != order.end(); ++it) {
    auto& part = it < cut ? split.train : split.validation;
    part.utterances.push_back(corpus.utterances[*it]);
  }
  return split;
}

}  // namespace tacs
