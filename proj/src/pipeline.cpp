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

#include "tacs/pipeline.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "tacs/error.hpp"

namespace tacs {

namespace {

std::ifstream OpenInput(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return in;
}

std::ofstream OpenOutput(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

void Finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void WriteJson(const Json& json, const fs::path& path) {
  auto out = OpenOutput(path);
  out << json.dump(2) << '\n';
  Finish(out, path);
}

template <typename Fn>
void WriteWith(const fs::path& path, Fn&& write) {
  auto out = OpenOutput(path);
  write(out);
  Finish(out, path);
}

// Rethrows parse errors with the file name prefixed.
template <typename Fn>
auto WithFileContext(const fs::path& path, Fn&& parse) {
  try {
    return parse();
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace

int ExitStatusForCurrentException() {
  try {
    throw;
  } catch (const FormatError&) {
    return kExitFormat;
  } catch (const DegenerateError&) {
    return kExitDegenerate;
  } catch (const AlignmentError&) {
    return kExitAlignment;
  } catch (const std::invalid_argument&) {
    return kExitFormat;
  } catch (...) {
    return kExitFailure;
  }
}

std::vector<Utterance> LoadDataset(const fs::path& path) {
  auto in = OpenInput(path);
  return WithFileContext(path, [&] { return ParseDataset(in); });
}

TaggedCorpus LoadConll(const fs::path& path) {
  auto in = OpenInput(path);
  return WithFileContext(path, [&] { return ParseConll(in); });
}

LidModel LoadModel(const fs::path& path) {
  auto in = OpenInput(path);
  return WithFileContext(path, [&] {
    Json json;
    try {
      json = Json::parse(in);
    } catch (const Json::exception& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return LidModelFromJson(json);
  });
}

void TagSource::Validate() const {
  const int active = int{model.has_value()} + int{external_tags.has_value()} +
                     int{gold.has_value()};
  if (active != 1) {
    throw std::invalid_argument(
        "exactly one tag source is required: --model, --tags or --gold");
  }
}

FilterReport RunFilter(const fs::path& input, const fs::path& out_dir) {
  const std::vector<Utterance> dataset = LoadDataset(input);
  const FilterReport report = MakeFilterReport(dataset);
  const ScriptPartition parts = PartitionByScript(dataset);
  fs::create_directories(out_dir);
  WriteJson(ToJson(report), out_dir / "filter_report.json");
  WriteWith(out_dir / "romanized.tsv",
            [&](std::ostream& out) { WriteDataset(parts.romanized, out); });
  WriteWith(out_dir / "tamil_script.tsv",
            [&](std::ostream& out) { WriteDataset(parts.tamil_script, out); });
  return report;
}

TrainOutcome TrainAndEvaluate(const TaggedCorpus& corpus, const LidConfig& lid,
                              double split, std::uint64_t seed) {
  const TrainValidationSplit parts = SplitTrainValidation(corpus, split, seed);
  if (parts.validation.empty()) {
    throw FormatError("validation split is empty; raise --split or add data");
  }
  LidModel model = Train(parts.train, lid);
  TaggedCorpus predicted;
  for (const TaggedUtterance& gold : parts.validation.utterances) {
    TaggedUtterance p;
    p.tokens = gold.tokens;
    for (const std::string& token : gold.tokens) {
      const auto ruled = RuleTag(token);
      p.tags.push_back(ruled ? *ruled : model.Classify(token));
    }
    predicted.utterances.push_back(std::move(p));
  }
  EvalReport report = Evaluate(predicted, parts.validation);
  return TrainOutcome{std::move(model), report, parts.train.size(),
                      parts.validation.size()};
}

TrainOutcome RunTrain(const fs::path& gold, const LidConfig& lid, double split,
                      std::uint64_t seed, const fs::path& out_dir) {
  const TaggedCorpus corpus = LoadConll(gold);
  TrainOutcome outcome = TrainAndEvaluate(corpus, lid, split, seed);
  fs::create_directories(out_dir);
  WriteJson(ToJson(outcome.model), out_dir / "model.json");
  WriteJson(ToJson(outcome.validation), out_dir / "eval_report.json");
  return outcome;
}

TaggedCorpus TagAnalysisSubset(const std::vector<Utterance>& dataset,
                               const TagSource& source) {
  source.Validate();
  const ScriptPartition parts = PartitionByScript(dataset);
  const std::vector<Utterance> subset = SelectAnalysisSubset(parts.romanized);

  if (source.external_tags) {
    const TaggedCorpus external = LoadConll(*source.external_tags);
    if (external.size() == subset.size()) return ImportTags(subset, external);
    if (external.size() == parts.romanized.size()) {
      TaggedCorpus merged = ImportTags(parts.romanized, external);
      std::erase_if(merged.utterances, [](const TaggedUtterance& u) {
        return !IsAnalysisSentiment(*u.sentiment);
      });
      return merged;
    }
    throw AlignmentError("external tags cover " +
                         std::to_string(external.size()) +
                         " utterances; expected " +
                         std::to_string(parts.romanized.size()) +
                         " (romanized) or " + std::to_string(subset.size()) +
                         " (analysis subset)");
  }

  const LidModel model =
      source.model
          ? LoadModel(*source.model)
          : TrainAndEvaluate(LoadConll(*source.gold), source.lid, source.split,
                             source.seed)
                .model;
  TaggedCorpus tagged;
  tagged.utterances.reserve(subset.size());
  for (const Utterance& u : subset) {
    TaggedUtterance t = Predict(model, u.text);
    t.sentiment = u.sentiment;
    t.id = u.id;
    tagged.utterances.push_back(std::move(t));
  }
  return tagged;
}

TaggedCorpus RunTag(const fs::path& input, const TagSource& source,
                    const fs::path& out_dir) {
  source.Validate();
  TaggedCorpus tagged = TagAnalysisSubset(LoadDataset(input), source);
  fs::create_directories(out_dir);
  WriteWith(out_dir / "tagged.conll",
            [&](std::ostream& out) { WriteConll(tagged, out); });
  return tagged;
}

AnalysisBundle Analyze(const TaggedCorpus& corpus, SwitchMode mode) {
  AnalysisBundle bundle;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const TaggedUtterance& u = corpus.utterances[i];
    if (u.tags.empty()) {
      std::cerr << "note: skipping utterance " << i << " (no tokens)\n";
      continue;
    }
    if (!u.sentiment) {
      throw FormatError("utterance " + std::to_string(i) +
                        " has no sentiment label");
    }
    if (!IsAnalysisSentiment(*u.sentiment)) {
      throw FormatError("utterance " + std::to_string(i) + " has sentiment '" +
                        std::string(ToString(*u.sentiment)) +
                        "', outside the analysis subset");
    }
    bundle.corpus.utterances.push_back(u);
    bundle.metrics.push_back(ComputeUtteranceMetrics(u, mode));
  }
  if (bundle.metrics.empty()) throw DegenerateError("empty analysis subset");

  bundle.groups = SummarizeGroups(bundle.metrics);
  const stats::ModelSpec specs[] = {
      stats::ModelSpec::Model1a(), stats::ModelSpec::Model1b(),
      stats::ModelSpec::Model2a(), stats::ModelSpec::Model2b()};
  for (std::size_t i = 0; i < 4; ++i) {
    bundle.fits[i] = stats::FitModel(bundle.metrics, specs[i]);
    bundle.qq[i] = stats::MakeQQData(bundle.fits[i]);
  }
  bundle.anova[0] = stats::AnovaCompare(bundle.fits[0], bundle.fits[1]);
  bundle.anova[1] = stats::AnovaCompare(bundle.fits[2], bundle.fits[3]);
  return bundle;
}

void WriteAnalysisBundle(const AnalysisBundle& bundle,
                         const AnalysisOptions& options,
                         const fs::path& out_dir) {
  fs::create_directories(out_dir);
  WriteWith(out_dir / "metrics.tsv",
            [&](std::ostream& out) { WriteMetricsTsv(bundle.corpus, out); });
  WriteJson(Table1Json(bundle.groups, options.aggregation, options.switch_mode),
            out_dir / "table1.json");
  WriteWith(out_dir / "table1.tsv", [&](std::ostream& out) {
    WriteTable1Tsv(bundle.groups, options.aggregation, options.paper_rounding,
                   out);
  });
  WriteJson(BoxplotJson(bundle.groups, BoxVariable::kEnProp),
            out_dir / "boxplot_en.json");
  WriteJson(BoxplotJson(bundle.groups, BoxVariable::kSwitches),
            out_dir / "boxplot_switches.json");
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string name = kModelNames[i];
    WriteJson(ToJson(bundle.fits[i]), out_dir / ("model_" + name + ".json"));
    WriteWith(out_dir / ("qq_" + name + ".tsv"),
              [&](std::ostream& out) { WriteQQTsv(bundle.qq[i], out); });
  }
  for (std::size_t i = 0; i < 2; ++i) {
    Json anova = ToJson(bundle.anova[i]);
    anova["reduced"] = kModelNames[2 * i];
    anova["full"] = kModelNames[2 * i + 1];
    WriteJson(anova, out_dir / ("anova_" + std::to_string(i + 1) + ".json"));
  }
}

}  // namespace tacs
