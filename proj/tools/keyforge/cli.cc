// Copyright 2026 The Keyforge Authors.
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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "keyforge/analyze.h"
#include "keyforge/benchmark_runner.h"
#include "keyforge/context.h"
#include "keyforge/corpus.h"
#include "keyforge/document.h"
#include "keyforge/errors.h"
#include "keyforge/eval.h"
#include "keyforge/extract.h"
#include "keyforge/io.h"
#include "keyforge/postprocess.h"
#include "keyforge/report.h"
#include "keyforge/resources.h"

namespace keyforge::cli {
namespace {

namespace fs = std::filesystem;

// A violated precondition on the command line or in the config file.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  std::string data_dir;
  int jobs = 1;
};

struct PipelineOptions {
  std::string extractor = "statistical";
  std::string steps = "B";
  size_t k = 10;
  int max_n = 3;
  int window = 10;
  double damping = 0.85;
  int statistical_window = 1;
  std::string context_mode = "manual";
  std::string thesaurus;
  std::string thesaurus_map;
  std::string model;
  std::string lookup;
  std::string wiki_titles;
  std::string wordlist;
  std::string grammar;
  double thesaurus_factor = 2.0;
  double wiki_factor = 2.0;
};

struct ExtractOptions {
  std::string input = "-";
  bool scores = false;
};

struct BenchOptions {
  std::vector<std::string> datasets;
  std::string combos = "B,P,T,W,PT,PW,TW,PTW";
  std::string out = "keyforge_report";
};

struct AnalyzeOptions {
  std::string kind;
  std::vector<std::string> datasets;
  size_t top = 10;
  std::string wiki_titles;
  std::string format = "tsv";
  std::string out;
};

struct TrainOptionsCli {
  std::string corpus;
  std::string out = "context_model.json";
  uint64_t seed = 0;
  int folds = 5;
  double l2 = 1e-4;
  int max_epochs = 500;
};

struct ClassifyOptions {
  std::string model;
  std::vector<std::string> inputs;
};

std::string FormatScore(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path != "-") return ReadTextFile(path);
  std::string content{std::istreambuf_iterator<char>(in),
                      std::istreambuf_iterator<char>()};
  if (!IsValidUtf8(content)) throw EncodingError("stdin is not valid UTF-8");
  return content;
}

void AddPipelineFlags(CLI::App* app, PipelineOptions& o) {
  app->add_option("--extractor", o.extractor, "statistical or graph")
      ->check(CLI::IsMember({"statistical", "graph"}));
  app->add_option("--k", o.k, "Number of keywords per document");
  app->add_option("--max-n", o.max_n, "Longest candidate n-gram")
      ->check(CLI::PositiveNumber);
  app->add_option("--window", o.window, "Graph co-occurrence window")
      ->check(CLI::Range(2, 1000000));
  app->add_option("--damping", o.damping, "Graph PageRank damping");
  app->add_option("--statistical-window", o.statistical_window,
                  "Relatedness context window of the statistical extractor")
      ->check(CLI::PositiveNumber);
  app->add_option("--context-mode", o.context_mode,
                  "Thesaurus selection: manual (--thesaurus) or auto "
                  "(--model and --lookup)")
      ->check(CLI::IsMember({"manual", "auto"}));
  app->add_option("--thesaurus", o.thesaurus, "Thesaurus term list (manual)");
  app->add_option("--model", o.model, "Context model file (auto)");
  app->add_option("--lookup", o.lookup, "label=path thesaurus table (auto)");
  app->add_option("--wiki-titles", o.wiki_titles, "Wikipedia title list");
  app->add_option("--wordlist", o.wordlist,
                  "Common-word list removed from the title unigrams");
  app->add_option("--grammar", o.grammar, "PoS pattern grammar override");
  app->add_option("--thesaurus-factor", o.thesaurus_factor,
                  "Weight multiplier for thesaurus matches");
  app->add_option("--wiki-factor", o.wiki_factor,
                  "Weight multiplier for Wikipedia matches");
}

// Checks resource flags against the requested steps before anything is
// loaded.
void CheckRunConfig(const PipelineOptions& o, bool any_t, bool any_w,
                    bool per_dataset_map) {
  if (any_t) {
    if (o.context_mode == "manual" && o.thesaurus.empty() &&
        !(per_dataset_map && !o.thesaurus_map.empty())) {
      throw UsageError(per_dataset_map
                           ? "step T needs a thesaurus: pass --thesaurus or "
                             "--thesaurus-map, or use --context-mode auto"
                           : "step T needs a thesaurus: pass --thesaurus, or "
                             "--context-mode auto with --model and --lookup");
    }
    if (o.context_mode == "auto" && (o.model.empty() || o.lookup.empty())) {
      throw UsageError("step T in auto context mode needs --model and --lookup");
    }
  }
  if (any_w && (o.wiki_titles.empty() || o.wordlist.empty())) {
    throw UsageError("step W needs --wiki-titles and --wordlist");
  }
}

struct LoadedResources {
  std::unique_ptr<TextProcessor> text;
  std::shared_ptr<const DictionarySet> stopwords;
  std::unique_ptr<Thesaurus> thesaurus;
  std::unique_ptr<EntityGazetteer> gazetteer;
  std::unique_ptr<ContextClassifier> classifier;
  std::unique_ptr<ThesaurusRouter> router;
  PipelineResources pipeline;
};

LoadedResources LoadResources(const GlobalOptions& g, const PipelineOptions& o,
                              bool any_t, bool any_w) {
  LoadedResources r;
  std::optional<fs::path> override;
  if (!g.data_dir.empty()) override = g.data_dir;
  fs::path data = ResolveDataDir(override);
  r.text = std::make_unique<TextProcessor>(TextProcessor::FromDataDir(data));
  r.stopwords = std::make_shared<const DictionarySet>(LoadStopwords(data));

  PipelineResources& p = r.pipeline;
  p.text = r.text.get();
  p.extractor.max_n = o.max_n;
  p.extractor.window = o.window;
  p.extractor.damping = o.damping;
  p.extractor.statistical_window = o.statistical_window;
  p.extractor.stopwords = r.stopwords;
  p.boost.thesaurus_factor = o.thesaurus_factor;
  p.boost.wiki_factor = o.wiki_factor;
  p.extractor.Validate();
  p.boost.Validate();
  if (!o.grammar.empty()) p.grammar = LoadPatternGrammar(o.grammar);

  if (any_t && o.context_mode == "manual" && !o.thesaurus.empty()) {
    r.thesaurus =
        std::make_unique<Thesaurus>(LoadThesaurus(o.thesaurus, *r.text));
    p.thesaurus = r.thesaurus.get();
  }
  if (any_t && o.context_mode == "auto") {
    r.classifier =
        std::make_unique<ContextClassifier>(ContextClassifier::Load(o.model));
    ContextLookup lookup = LoadContextLookup(o.lookup);
    CheckLookupCovers(*r.classifier, lookup);
    r.router = std::make_unique<ThesaurusRouter>(std::move(lookup), *r.text);
  }
  if (any_w) {
    DictionarySet dict = LoadWordlist(o.wordlist);
    r.gazetteer = std::make_unique<EntityGazetteer>(
        LoadWikiTitles(o.wiki_titles, dict, *r.text));
    p.gazetteer = r.gazetteer.get();
  }
  return r;
}

std::vector<StepSet> ParseCombos(const std::string& list) {
  std::vector<StepSet> combos;
  for (std::string_view item : SplitOn(list, ',')) {
    item = Trim(item);
    if (item.empty()) continue;
    StepSet s = StepSet::Parse(item);
    if (std::find(combos.begin(), combos.end(), s) == combos.end()) {
      combos.push_back(s);
    }
  }
  if (combos.empty()) throw UsageError("--combos lists no combination");
  return combos;
}

int CmdExtract(const GlobalOptions& g, const PipelineOptions& o,
               const ExtractOptions& e, std::istream& in, std::ostream& out) {
  StepSet steps = StepSet::Parse(o.steps);
  ExtractorKind kind = ParseExtractorKind(o.extractor);
  CheckRunConfig(o, steps.thesaurus, steps.wiki, false);
  std::string text = ReadInput(e.input, in);
  LoadedResources r = LoadResources(g, o, steps.thesaurus, steps.wiki);
  std::shared_ptr<const Thesaurus> routed;
  if (r.router) {
    routed = r.router->Route(r.classifier->Predict(text).label);
    r.pipeline.thesaurus = routed.get();
  }
  Document doc = r.text->Process(std::move(text));
  std::string buffer;
  for (const RankedPhrase& p : RunPipeline(doc, kind, steps, r.pipeline, o.k)) {
    buffer += p.phrase;
    if (e.scores) buffer += "\t" + FormatScore(p.effective_score);
    buffer += "\n";
  }
  out << buffer;
  return kExitOk;
}

int CmdBench(const GlobalOptions& g, const PipelineOptions& o,
             const BenchOptions& b, std::ostream& out, std::ostream& err) {
  std::vector<StepSet> combos = ParseCombos(b.combos);
  ExtractorKind kind = ParseExtractorKind(o.extractor);
  bool any_t = std::any_of(combos.begin(), combos.end(),
                           [](const StepSet& s) { return s.thesaurus; });
  bool any_w = std::any_of(combos.begin(), combos.end(),
                           [](const StepSet& s) { return s.wiki; });
  CheckRunConfig(o, any_t, any_w, true);
  LoadedResources r = LoadResources(g, o, any_t, any_w);

  ContextLookup thesaurus_map;
  if (any_t && o.context_mode == "manual" && !o.thesaurus_map.empty()) {
    thesaurus_map = LoadContextLookup(o.thesaurus_map);
  }
  std::vector<std::unique_ptr<KeDataset>> loaded;
  std::vector<std::unique_ptr<Thesaurus>> per_dataset;
  std::vector<BenchmarkDataset> datasets;
  std::vector<std::string> failures;
  for (const std::string& dir : b.datasets) {
    try {
      auto ds = std::make_unique<KeDataset>(LoadDataset(dir));
      BenchmarkDataset bd;
      bd.dataset = ds.get();
      if (any_t && r.router) {
        const ContextClassifier* clf = r.classifier.get();
        ThesaurusRouter* router = r.router.get();
        bd.thesaurus = [clf, router](const DatasetDocument& doc) {
          return router->Route(clf->Predict(doc.text).label).get();
        };
      } else if (any_t) {
        auto it = thesaurus_map.find(ds->name);
        if (it != thesaurus_map.end()) {
          per_dataset.push_back(
              std::make_unique<Thesaurus>(LoadThesaurus(it->second, *r.text)));
          bd.thesaurus = FixedThesaurus(per_dataset.back().get());
        } else if (r.thesaurus) {
          bd.thesaurus = FixedThesaurus(r.thesaurus.get());
        } else {
          throw UsageError("no thesaurus for dataset " + ds->name +
                           " in --thesaurus-map");
        }
      }
      datasets.push_back(std::move(bd));
      loaded.push_back(std::move(ds));
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      failures.push_back(dir + ": " + e.what());
    }
  }

  BenchmarkOptions options;
  options.extractor = kind;
  options.combos = combos;
  options.k = o.k;
  options.jobs = g.jobs;
  BenchmarkReport report = RunBenchmark(datasets, r.pipeline, options);
  EmitReport(report, fs::path(b.out));
  out << "datasets: " << report.datasets.size() << ", combos: "
      << report.combos.size() << ", report: " << b.out << ".tsv, " << b.out
      << ".json\n";
  out << ImprovementSummary(report);
  if (!failures.empty()) {
    err << "keyforge: failed datasets:\n";
    for (const std::string& f : failures) err << "  " << f << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int CmdAnalyze(const GlobalOptions& g, const AnalyzeOptions& a,
               std::ostream& out) {
  if (a.kind == "wiki" && a.wiki_titles.empty()) {
    throw UsageError("analyze wiki needs --wiki-titles");
  }
  ReportFormat format = ParseReportFormat(a.format);
  std::vector<KeDataset> datasets;
  for (const std::string& dir : a.datasets) datasets.push_back(LoadDataset(dir));

  std::unique_ptr<TextProcessor> text;
  if (a.kind != "ngram") {
    std::optional<fs::path> override;
    if (!g.data_dir.empty()) override = g.data_dir;
    text = std::make_unique<TextProcessor>(
        TextProcessor::FromDataDir(ResolveDataDir(override)));
  }

  std::string result;
  if (a.kind == "wiki") {
    GazetteerOptions options;
    options.max_tokens = 0;  // coverage uses every title, unfiltered
    EntityGazetteer gazetteer = LoadWikiTitles(a.wiki_titles, *text, options);
    std::vector<CoverageRow> rows;
    double sum = 0.0;
    for (const KeDataset& ds : datasets) {
      rows.push_back({ds.name, WikiCoverage(ds, gazetteer, *text),
                      ds.gold_count()});
      sum += rows.back().pct;
    }
    if (rows.size() > 1) rows.push_back({"average", sum / rows.size(), 0});
    result = format == ReportFormat::kTsv ? CoverageToTsv(rows)
                                          : CoverageToJson(rows);
  } else {
    std::vector<DistributionTable> tables;
    for (const KeDataset& ds : datasets) {
      tables.push_back(a.kind == "pos"
                           ? PosPatternDistribution(ds, *text, a.top)
                           : NgramDistribution(ds));
    }
    if (tables.size() > 1) {
      if (a.kind == "pos") {
        tables.push_back(AverageDistributions(tables, a.top));
      } else {
        DistributionTable avg;
        avg.name = "average";
        for (size_t c = 0; c < tables.front().rows.size(); ++c) {
          double s = 0.0;
          for (const DistributionTable& t : tables) s += t.rows[c].pct;
          avg.rows.push_back({tables.front().rows[c].key, s / tables.size()});
        }
        for (const DistributionTable& t : tables) avg.total_items += t.total_items;
        avg.full.assign(avg.rows.begin(), avg.rows.begin() + 4);
        tables.push_back(std::move(avg));
      }
    }
    if (format == ReportFormat::kJson) {
      result = DistributionToJson(tables);
    } else {
      result = a.kind == "pos" ? DistributionToTsv(tables)
                               : DistributionToWideTsv(tables);
    }
  }
  if (a.out.empty()) {
    out << result;
  } else {
    WriteTextFile(a.out, result);
  }
  return kExitOk;
}

int CmdTrainContext(const TrainOptionsCli& t, std::ostream& out) {
  std::vector<LabeledText> corpus = LoadLabeledCorpus(t.corpus);
  if (corpus.empty()) throw InsufficientDataError("training corpus is empty");
  std::vector<LabeledText> balanced = Downsample(corpus, t.seed);
  TrainOptions options;
  options.seed = t.seed;
  options.l2 = t.l2;
  options.max_epochs = t.max_epochs;
  CrossValidationResult cv = CrossValidate(balanced, t.folds, options);
  ContextClassifier clf = TrainContextClassifier(balanced, options);
  clf.Save(t.out);
  std::string buffer = "samples: " + std::to_string(corpus.size()) +
                       ", balanced: " + std::to_string(balanced.size()) +
                       ", classes: " + std::to_string(clf.classes().size()) +
                       "\n";
  for (size_t f = 0; f < cv.fold_accuracy.size(); ++f) {
    buffer += "fold " + std::to_string(f + 1) + "\taccuracy " +
              FormatFixed(cv.fold_accuracy[f], 4) + "\n";
  }
  buffer += "mean\taccuracy " + FormatFixed(cv.mean_accuracy, 4) + "\n";
  buffer += "model: " + t.out + "\n";
  out << buffer;
  return kExitOk;
}

int CmdClassifyContext(const ClassifyOptions& c, std::istream& in,
                       std::ostream& out) {
  ContextClassifier clf = ContextClassifier::Load(c.model);
  std::vector<std::string> inputs = c.inputs;
  if (inputs.empty()) inputs.push_back("-");
  std::string buffer;
  for (const std::string& path : inputs) {
    Prediction p = clf.Predict(ReadInput(path, in));
    buffer += (path == "-" ? "stdin" : path) + "\t" + p.label + "\t" +
              FormatFixed(p.confidence, 6);
    if (p.low_confidence) buffer += "\tlow-confidence";
    buffer += "\n";
  }
  out << buffer;
  return kExitOk;
}

}  // namespace

std::vector<std::string> ExpandConfig(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::optional<std::string> config;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a file");
      config = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      config = a.substr(9);
    } else {
      rest.push_back(a);
    }
  }
  if (!config) return rest;

  std::vector<std::string> injected;
  std::string content = ReadTextFile(*config);
  size_t line_no = 0;
  for (std::string_view line : SplitLines(content)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    size_t eq = line.find('=');
    std::string key(Trim(line.substr(0, eq == std::string_view::npos ? 0 : eq)));
    if (eq == std::string_view::npos || key.empty()) {
      throw FormatError(*config + ":" + std::to_string(line_no) +
                        ": expected key=value");
    }
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    injected.push_back("--" + key + "=" + std::string(Trim(line.substr(eq + 1))));
  }
  // Insert after the subcommand so its own options accept the values.
  static const std::set<std::string> kSubcommands = {
      "extract", "bench", "analyze", "train-context", "classify-context"};
  auto sub = std::find_if(rest.begin(), rest.end(), [](const std::string& a) {
    return kSubcommands.count(a) > 0;
  });
  if (sub == rest.end()) throw ConfigError("--config given without a subcommand");
  rest.insert(sub + 1, injected.begin(), injected.end());
  return rest;
}

int RunCli(const std::vector<std::string>& raw_args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  GlobalOptions global;
  PipelineOptions pipe;
  ExtractOptions ext;
  BenchOptions bench;
  AnalyzeOptions analyze;
  TrainOptionsCli train;
  ClassifyOptions classify;

  CLI::App app{"keyforge: keyword extraction with PoS, thesaurus and "
               "Wikipedia post-processing",
               "keyforge"};
  app.option_defaults()->always_capture_default()->multi_option_policy(
      CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Resources default to $KEYFORGE_DATA, then the built-in data directory.\n"
      "--config FILE reads key=value lines (long flag names without dashes);\n"
      "flags given on the command line take precedence.\n"
      "Exit codes: 0 ok, 1 runtime failure, 2 usage error.");
  app.add_option("--data-dir", global.data_dir,
                 "Resource directory (lexicon, rules, stopwords)");
  app.add_option("--jobs", global.jobs, "Worker threads for per-document work")
      ->check(CLI::PositiveNumber);
  std::string config_path;  // consumed by ExpandConfig; listed for --help
  app.add_option("--config", config_path,
                 "key=value option file (expanded before parsing)");

  CLI::App* extract = app.add_subcommand("extract", "Top-k keywords of one document");
  AddPipelineFlags(extract, pipe);
  extract->add_option("--steps", pipe.steps, "B or letters from P, T, W");
  extract->add_flag("--scores", ext.scores, "Append the effective score column");
  extract->add_option("input", ext.input, "Text file, or - for stdin");

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "All step combinations over datasets");
  AddPipelineFlags(bench_cmd, pipe);
  bench_cmd->add_option("--thesaurus-map", pipe.thesaurus_map,
                        "dataset=path thesaurus table (manual mode)");
  bench_cmd->add_option("--combos", bench.combos,
                        "Comma-separated combinations to run");
  bench_cmd->add_option("--out", bench.out,
                        "Report path stem; writes STEM.tsv and STEM.json");
  bench_cmd->add_option("datasets", bench.datasets, "Dataset directories")
      ->required();

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Gold keyword analyses: pos, ngram, wiki");
  analyze_cmd->add_option("kind", analyze.kind, "pos, ngram or wiki")
      ->required()
      ->check(CLI::IsMember({"pos", "ngram", "wiki"}));
  analyze_cmd->add_option("datasets", analyze.datasets, "Dataset directories")
      ->required();
  analyze_cmd->add_option("--top", analyze.top, "Rows shown for pos");
  analyze_cmd->add_option("--wiki-titles", analyze.wiki_titles,
                          "Wikipedia title list (wiki)");
  analyze_cmd->add_option("--format", analyze.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  analyze_cmd->add_option("--out", analyze.out, "Output file (default stdout)");

  CLI::App* train_cmd = app.add_subcommand(
      "train-context", "Train the context classifier with cross-validation");
  train_cmd->add_option("corpus", train.corpus,
                        "label<TAB>title<TAB>abstract per line")
      ->required();
  train_cmd->add_option("--out", train.out, "Model output path");
  train_cmd->add_option("--seed", train.seed, "Sampling and training seed");
  train_cmd->add_option("--folds", train.folds, "Cross-validation folds")
      ->check(CLI::Range(2, 1000));
  train_cmd->add_option("--l2", train.l2, "L2 regularization strength");
  train_cmd->add_option("--max-epochs", train.max_epochs, "Epoch cap")
      ->check(CLI::PositiveNumber);

  CLI::App* classify_cmd = app.add_subcommand(
      "classify-context", "Predict the context label of documents");
  classify_cmd->add_option("--model", classify.model, "Context model file")
      ->required();
  classify_cmd->add_option("inputs", classify.inputs,
                           "Text files (default: stdin)");

  std::vector<std::string> args;
  try {
    args = ExpandConfig(raw_args);
  } catch (const Error& e) {
    err << "keyforge: " << e.what() << "\n";
    return kExitUsage;
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (extract->parsed()) return CmdExtract(global, pipe, ext, in, out);
    if (bench_cmd->parsed()) return CmdBench(global, pipe, bench, out, err);
    if (analyze_cmd->parsed()) return CmdAnalyze(global, analyze, out);
    if (train_cmd->parsed()) return CmdTrainContext(train, out);
    if (classify_cmd->parsed()) return CmdClassifyContext(classify, in, out);
  } catch (const UsageError& e) {
    err << "keyforge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "keyforge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MissingResourceError& e) {
    err << "keyforge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    // Malformed training corpora are usage errors; other format problems
    // are runtime failures.
    err << "keyforge: " << e.what() << "\n";
    return train_cmd->parsed() ? kExitUsage : kExitRuntime;
  } catch (const InsufficientDataError& e) {
    err << "keyforge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "keyforge: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace keyforge::cli
