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

#include "tacs/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "tacs/error.hpp"

namespace tacs {

namespace {

// Shortest text that parses back to the same double, or printf `format`.
std::string FormatDouble(double v, const char* format = nullptr) {
  char buf[64];
  if (format == nullptr) {
    const auto result = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, result.ptr);
  }
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

Json NullableNumber(double v) {
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) fields.push_back(field);
  if (!line.empty() && line.back() == '\t') fields.emplace_back();
  return fields;
}

template <typename T>
T ParseNumber(const std::string& text, std::size_t line_no,
              const char* column) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError(std::string("invalid ") + column + " '" + text +
                      "' at line " + std::to_string(line_no));
  }
  return value;
}

Json BoxJson(const GroupSummary& g, const BoxStats& box) {
  return Json{{"sentiment", std::string(ToString(g.sentiment))},
              {"n", g.n},
              {"min", box.min},
              {"q1", box.q1},
              {"median", box.median},
              {"q3", box.q3},
              {"max", box.max},
              {"mean", box.mean}};
}

}  // namespace

std::string_view ToString(Aggregation aggregation) {
  return aggregation == Aggregation::kMacro ? "macro" : "micro";
}

Json ToJson(const FilterReport& r) {
  return Json{{"total", r.total},
              {"tamil_script", r.tamil_script},
              {"romanized", r.romanized},
              {"excluded_unknown_state", r.excluded_unknown_state},
              {"excluded_not_tamil", r.excluded_not_tamil},
              {"analysis_subset", r.analysis_subset}};
}

Json ToJson(const EvalReport& r) {
  Json classes = Json::array();
  Json confusion = Json::array();
  Json per_class = Json::object();
  for (LangTag tag : kAllLangTags) {
    const std::size_t k = Index(tag);
    const std::string name(ToString(tag));
    classes.push_back(name);
    confusion.push_back(Json(r.confusion[k]));
    std::size_t support = 0;
    for (std::size_t j = 0; j < kNumLangTags; ++j) support += r.confusion[k][j];
    per_class[name] = Json{{"precision", r.precision[k]},
                           {"recall", r.recall[k]},
                           {"f1", r.f1[k]},
                           {"support", support}};
  }
  return Json{{"classes", classes},     {"confusion", confusion},
              {"per_class", per_class}, {"macro_f1", r.macro_f1},
              {"accuracy", r.accuracy}, {"total", r.total}};
}

Json ToJson(const LidConfig& c) {
  return Json{{"ngram_min", c.ngram_min},
              {"ngram_max", c.ngram_max},
              {"min_ngram_count", c.min_ngram_count},
              {"l2_penalty", c.l2_penalty},
              {"learning_rate", c.learning_rate},
              {"epochs", c.epochs},
              {"seed", c.seed}};
}

LidConfig LidConfigFromJson(const Json& json) {
  if (!json.is_object()) throw FormatError("model config must be an object");
  LidConfig c;
  try {
    c.ngram_min = json.value("ngram_min", c.ngram_min);
    c.ngram_max = json.value("ngram_max", c.ngram_max);
    c.min_ngram_count = json.value("min_ngram_count", c.min_ngram_count);
    c.l2_penalty = json.value("l2_penalty", c.l2_penalty);
    c.learning_rate = json.value("learning_rate", c.learning_rate);
    c.epochs = json.value("epochs", c.epochs);
    c.seed = json.value("seed", c.seed);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid model config: ") + e.what());
  }
  c.Validate();
  return c;
}

Json ToJson(const LidModel& model) {
  Json classes = Json::array();
  for (LangTag tag : kAllLangTags) classes.push_back(std::string(ToString(tag)));
  Json index = Json::object();
  for (const auto& [gram, id] : model.feature_index()) index[gram] = id;
  return Json{{"classes", classes},
              {"feature_index", index},
              {"weights", model.weights()},
              {"config", ToJson(model.config())}};
}

LidModel LidModelFromJson(const Json& json) {
  try {
    const Json& classes = json.at("classes");
    if (!classes.is_array() || classes.size() != kNumLangTags) {
      throw FormatError("model classes must be [\"en\", \"ta\", \"na\"]");
    }
    for (LangTag tag : kAllLangTags) {
      if (classes[Index(tag)] != ToString(tag)) {
        throw FormatError("model classes must be [\"en\", \"ta\", \"na\"]");
      }
    }
    FeatureIndex index;
    for (const auto& [gram, id] : json.at("feature_index").items()) {
      index.emplace(gram, id.get<std::size_t>());
    }
    auto weights = json.at("weights").get<std::vector<double>>();
    return LidModel(std::move(index), std::move(weights),
                    LidConfigFromJson(json.at("config")));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid model file: ") + e.what());
  }
}

Json ToJson(const stats::FitResult& fit) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
    Json row{{"name", fit.column_names[i]}, {"estimate", fit.coefficients[i]}};
    if (fit.has_inference) {
      row["std_error"] = fit.standard_errors[i];
      row["t"] = NullableNumber(fit.t_values[i]);
      row["p"] = fit.p_values[i];
    }
    rows.push_back(std::move(row));
  }
  Json out{{"n", fit.n},
           {"df_residual", fit.df_residual},
           {"r_squared", fit.r_squared},
           {"rss", fit.rss},
           {"tss", fit.tss},
           {"degenerate", fit.degenerate},
           {"coefficients", rows}};
  if (fit.spec) {
    out["model"] = fit.spec->name;
    out["outcome"] = std::string(stats::ToString(fit.spec->outcome));
  }
  return out;
}

Json ToJson(const stats::AnovaResult& a) {
  return Json{{"f", a.f_statistic},
              {"df1", a.df_numerator},
              {"df2", a.df_denominator},
              {"p", a.p_value}};
}

Json Table1Json(std::span<const GroupSummary> groups, Aggregation aggregation,
                SwitchMode mode) {
  Json rows = Json::array();
  for (const GroupSummary& g : groups) {
    const bool macro = aggregation == Aggregation::kMacro;
    rows.push_back(Json{
        {"sentiment", std::string(ToString(g.sentiment))},
        {"n", g.n},
        {"en_prop", macro ? g.mean_en_prop : g.micro_en_prop},
        {"ta_prop", macro ? g.mean_ta_prop : g.micro_ta_prop},
        {"na_prop", macro ? g.mean_na_prop : g.micro_na_prop},
        {"switches", g.mean_switches},
        {"sd_en_prop", g.sd_en_prop},
        {"sd_switches", g.sd_switches},
        {"sd_defined", g.sd_defined},
        {"macro",
         {{"en_prop", g.mean_en_prop},
          {"ta_prop", g.mean_ta_prop},
          {"na_prop", g.mean_na_prop}}},
        {"micro",
         {{"en_prop", g.micro_en_prop},
          {"ta_prop", g.micro_ta_prop},
          {"na_prop", g.micro_na_prop}}}});
  }
  return Json{{"aggregation", std::string(ToString(aggregation))},
              {"switch_mode", std::string(ToString(mode))},
              {"groups", rows}};
}

Json BoxplotJson(std::span<const GroupSummary> groups, BoxVariable variable) {
  Json rows = Json::array();
  for (const GroupSummary& g : groups) {
    rows.push_back(BoxJson(
        g, variable == BoxVariable::kEnProp ? g.en_prop_box : g.switches_box));
  }
  return Json{
      {"variable", variable == BoxVariable::kEnProp ? "en_prop" : "switches"},
      {"groups", rows}};
}

void WriteMetricsTsv(const TaggedCorpus& corpus, std::ostream& out) {
  out << "id\tsentiment\ttoken_count\ten_prop\tta_prop\tna_prop"
         "\tswitches_strict\tswitches_collapse\n";
  for (const TaggedUtterance& u : corpus.utterances) {
    if (!u.sentiment) throw FormatError("utterance without sentiment label");
    const UtteranceMetrics m =
        ComputeUtteranceMetrics(u, SwitchMode::kStrictBoundary);
    out << (u.id ? std::to_string(*u.id) : std::string()) << '\t'
        << ToString(*u.sentiment) << '\t' << m.token_count << '\t'
        << FormatDouble(m.en_prop) << '\t' << FormatDouble(m.ta_prop) << '\t'
        << FormatDouble(m.na_prop) << '\t' << m.switch_count << '\t'
        << CountSwitches(u.tags, SwitchMode::kCollapseNa) << '\n';
  }
}

std::vector<UtteranceMetrics> ReadMetricsTsv(std::istream& in,
                                             SwitchMode mode) {
  std::vector<UtteranceMetrics> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.starts_with("id\t")) continue;
    const auto f = SplitTabs(line);
    if (f.size() != 8) {
      throw FormatError("expected 8 metrics columns at line " +
                        std::to_string(line_no));
    }
    UtteranceMetrics m;
    if (!f[0].empty()) m.id = ParseNumber<std::size_t>(f[0], line_no, "id");
    m.sentiment = TryParseSentiment(f[1]);
    if (!m.sentiment) {
      throw FormatError("unknown sentiment label '" + f[1] + "' at line " +
                        std::to_string(line_no));
    }
    m.token_count = ParseNumber<std::size_t>(f[2], line_no, "token_count");
    m.en_prop = ParseNumber<double>(f[3], line_no, "en_prop");
    m.ta_prop = ParseNumber<double>(f[4], line_no, "ta_prop");
    m.na_prop = ParseNumber<double>(f[5], line_no, "na_prop");
    const auto tokens = static_cast<double>(m.token_count);
    m.en_tokens = static_cast<std::size_t>(std::llround(m.en_prop * tokens));
    m.ta_tokens = static_cast<std::size_t>(std::llround(m.ta_prop * tokens));
    m.na_tokens = static_cast<std::size_t>(std::llround(m.na_prop * tokens));
    m.mode = mode;
    m.switch_count = ParseNumber<std::size_t>(
        mode == SwitchMode::kStrictBoundary ? f[6] : f[7], line_no, "switches");
    rows.push_back(m);
  }
  return rows;
}

void WriteQQTsv(const stats::QQData& qq, std::ostream& out) {
  out << "theoretical_quantile\tstandardized_residual\n";
  for (const auto& [x, y] : qq.points) {
    out << FormatDouble(x) << '\t' << FormatDouble(y) << '\n';
  }
}

void WriteTable1Tsv(std::span<const GroupSummary> groups,
                    Aggregation aggregation, bool paper_rounding,
                    std::ostream& out) {
  const char* pct = paper_rounding ? "%.1f" : nullptr;
  const char* sw = paper_rounding ? "%.2f" : nullptr;
  const bool macro = aggregation == Aggregation::kMacro;
  out << "sentiment\tn\tEN%\tTA%\tNA%\tswitches\n";
  for (const GroupSummary& g : groups) {
    out << ToString(g.sentiment) << '\t' << g.n << '\t'
        << FormatDouble(100.0 * (macro ? g.mean_en_prop : g.micro_en_prop), pct)
        << '\t'
        << FormatDouble(100.0 * (macro ? g.mean_ta_prop : g.micro_ta_prop), pct)
        << '\t'
        << FormatDouble(100.0 * (macro ? g.mean_na_prop : g.micro_na_prop), pct)
        << '\t' << FormatDouble(g.mean_switches, sw) << '\n';
  }
}

}  // namespace tacs
