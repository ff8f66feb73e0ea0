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

// Command-line driver: filter, train, tag, analyze.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tacs/error.hpp"
#include "tacs/pipeline.hpp"

namespace {

using tacs::fs::path;

struct Flags {
  std::string input;
  std::string gold;
  std::string tags;
  std::string model;
  std::string out = ".";
  std::string switch_mode = "strict";
  std::string aggregation = "macro";
  double split = 0.2;
  std::uint64_t seed = 13;
  bool paper_rounding = false;
};

std::optional<path> OptionalPath(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return path(s);
}

tacs::TagSource MakeTagSource(const Flags& f) {
  tacs::TagSource source;
  source.model = OptionalPath(f.model);
  source.external_tags = OptionalPath(f.tags);
  source.gold = OptionalPath(f.gold);
  source.split = f.split;
  source.seed = f.seed;
  source.lid.seed = f.seed;
  return source;
}

void PrintEval(const tacs::TrainOutcome& outcome) {
  const tacs::EvalReport& r = outcome.validation;
  std::printf("train %zu / validation %zu utterances, %zu features\n",
              outcome.train_utterances, outcome.validation_utterances,
              outcome.model.num_features());
  std::printf("%-10s %8s\n", "class", "F1");
  for (tacs::LangTag tag : tacs::kAllLangTags) {
    std::printf("%-10s %8.3f\n", std::string(tacs::ToString(tag)).c_str(),
                r.f1[tacs::Index(tag)]);
  }
  std::printf("%-10s %8.3f\n%-10s %8.3f\n", "macro avg", r.macro_f1, "accuracy",
              r.accuracy);
}

int Run(int argc, char** argv) {
  CLI::App app{"Code-switching corpus analytics for romanized Tamil-English"};
  app.require_subcommand(1);
  Flags f;

  auto* filter = app.add_subcommand("filter", "split a dataset TSV by script");
  filter->add_option("--input", f.input, "dataset TSV")->required();
  filter->add_option("--out", f.out, "output directory");

  auto* train = app.add_subcommand("train", "train and validate the tagger");
  train->add_option("--gold", f.gold, "gold token-tag CoNLL")->required();
  train->add_option("--split", f.split, "validation fraction");
  train->add_option("--seed", f.seed, "split and initialization seed");
  train->add_option("--out", f.out, "output directory");

  auto* tag = app.add_subcommand("tag", "tag the romanized analysis subset");
  tag->add_option("--input", f.input, "dataset TSV")->required();
  tag->add_option("--model", f.model, "trained model.json");
  tag->add_option("--tags", f.tags, "externally produced CoNLL tags");
  tag->add_option("--gold", f.gold, "gold CoNLL to train on first");
  tag->add_option("--split", f.split, "validation fraction (with --gold)");
  tag->add_option("--seed", f.seed, "seed (with --gold)");
  tag->add_option("--out", f.out, "output directory");

  auto* analyze = app.add_subcommand(
      "analyze", "metrics, group summary, regressions, ANOVA and Q-Q data");
  analyze->add_option("--input", f.input,
                      "dataset TSV; tags come from --model, --tags or --gold");
  analyze->add_option("--tags", f.tags,
                      "tagged CoNLL with sentiment metadata, or external tags "
                      "when --input is given");
  analyze->add_option("--model", f.model, "trained model.json");
  analyze->add_option("--gold", f.gold, "gold CoNLL to train on first");
  analyze->add_option("--switch-mode", f.switch_mode, "strict or collapse")
      ->check(CLI::IsMember({"strict", "collapse"}));
  analyze->add_option("--aggregation", f.aggregation, "macro or micro")
      ->check(CLI::IsMember({"macro", "micro"}));
  analyze->add_flag("--paper-rounding", f.paper_rounding,
                    "one-decimal percentages in table1.tsv");
  analyze->add_option("--split", f.split, "validation fraction (with --gold)");
  analyze->add_option("--seed", f.seed, "seed (with --gold)");
  analyze->add_option("--out", f.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? tacs::kExitOk : tacs::kExitFailure;
  }

  const path out(f.out);
  if (filter->parsed()) {
    const tacs::FilterReport r = tacs::RunFilter(f.input, out);
    std::cout << tacs::ToJson(r).dump(2) << '\n';
  } else if (train->parsed()) {
    tacs::LidConfig lid;
    lid.seed = f.seed;
    PrintEval(tacs::RunTrain(f.gold, lid, f.split, f.seed, out));
  } else if (tag->parsed()) {
    const tacs::TaggedCorpus tagged =
        tacs::RunTag(f.input, MakeTagSource(f), out);
    std::printf("tagged %zu utterances -> %s\n", tagged.size(),
                (out / "tagged.conll").string().c_str());
  } else if (analyze->parsed()) {
    tacs::TaggedCorpus corpus;
    if (!f.input.empty()) {
      corpus =
          tacs::TagAnalysisSubset(tacs::LoadDataset(f.input), MakeTagSource(f));
    } else {
      if (f.tags.empty() || !f.model.empty() || !f.gold.empty()) {
        throw std::invalid_argument(
            "analyze without --input needs --tags (tagged CoNLL) only");
      }
      corpus = tacs::LoadConll(f.tags);
    }
    tacs::AnalysisOptions options;
    options.switch_mode = f.switch_mode == "strict"
                              ? tacs::SwitchMode::kStrictBoundary
                              : tacs::SwitchMode::kCollapseNa;
    options.aggregation = f.aggregation == "macro" ? tacs::Aggregation::kMacro
                                                   : tacs::Aggregation::kMicro;
    options.paper_rounding = f.paper_rounding;
    const tacs::AnalysisBundle bundle =
        tacs::Analyze(corpus, options.switch_mode);
    tacs::WriteAnalysisBundle(bundle, options, out);
    tacs::WriteTable1Tsv(bundle.groups, options.aggregation,
                         options.paper_rounding, std::cout);
  }
  return tacs::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tacs::ExitStatusForCurrentException();
  } catch (...) {
    std::cerr << "error: unknown failure\n";
    return tacs::kExitFailure;
  }
}
