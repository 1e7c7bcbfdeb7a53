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

#include "keyforge/benchmark_runner.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "keyforge/errors.h"

namespace keyforge {

ThesaurusSelector FixedThesaurus(const Thesaurus* thesaurus) {
  return [thesaurus](const DatasetDocument&) { return thesaurus; };
}

const EvalResult& BenchmarkReport::At(const std::string& dataset,
                                      const std::string& combo) const {
  auto it = grid.find({dataset, combo});
  if (it == grid.end()) {
    throw Error("no result for " + dataset + "/" + combo);
  }
  return it->second;
}

void ParallelFor(size_t n, int jobs, const std::function<void(size_t)>& fn) {
  size_t workers = std::min<size_t>(std::max(jobs, 1), n);
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) run(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (size_t i = next++; i < n; i = next++) run(i);
      });
    }
    for (std::thread& t : threads) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

BenchmarkReport RunBenchmark(const std::vector<BenchmarkDataset>& datasets,
                             const PipelineResources& resources,
                             const BenchmarkOptions& options) {
  BenchmarkReport report;
  report.extractor = std::string(ExtractorName(options.extractor));
  report.k = options.k;
  for (const StepSet& s : options.combos) report.combos.push_back(s.Name());
  const TextProcessor& text = *resources.text;

  for (const BenchmarkDataset& bd : datasets) {
    const KeDataset& ds = *bd.dataset;
    report.datasets.push_back(ds.name);
    for (const StepSet& s : options.combos) {
      if (s.thesaurus && !bd.thesaurus) {
        throw MissingResourceError("dataset " + ds.name +
                                   ": step T requires a thesaurus");
      }
      PipelineResources probe = resources;
      probe.thesaurus = s.thesaurus ? &Thesaurus::Empty() : nullptr;
      CheckResources(s, probe);
    }

    const size_t n_docs = ds.documents.size();
    // predictions[combo][doc]
    std::vector<std::vector<std::vector<std::string>>> predictions(
        options.combos.size(), std::vector<std::vector<std::string>>(n_docs));
    ParallelFor(n_docs, options.jobs, [&](size_t d) {
      const DatasetDocument& doc = ds.documents[d];
      Document processed = text.Process(doc.text);
      std::vector<CandidateKeyword> candidates =
          GenerateCandidates(processed, resources.extractor);
      if (candidates.empty()) return;
      Score(options.extractor, processed, candidates, resources.extractor);
      PipelineResources local = resources;
      local.thesaurus = nullptr;
      bool needs_thesaurus = std::any_of(
          options.combos.begin(), options.combos.end(),
          [](const StepSet& s) { return s.thesaurus; });
      if (needs_thesaurus) local.thesaurus = bd.thesaurus(doc);
      bool needs_lemma = std::any_of(
          options.combos.begin(), options.combos.end(),
          [](const StepSet& s) { return s.thesaurus || s.wiki; });
      if (needs_lemma) AssignLemmaForms(candidates, text);
      for (size_t c = 0; c < options.combos.size(); ++c) {
        PipelineResources step_resources = local;
        if (options.combos[c].thesaurus && step_resources.thesaurus == nullptr) {
          step_resources.thesaurus = &Thesaurus::Empty();
        }
        for (RankedPhrase& r : ApplySteps(candidates, options.combos[c],
                                          step_resources, options.k)) {
          predictions[c][d].push_back(std::move(r.phrase));
        }
      }
    });

    std::vector<std::vector<std::string>> gold;
    gold.reserve(n_docs);
    for (const DatasetDocument& doc : ds.documents) {
      gold.push_back(ds.GoldFor(doc.id));
    }
    for (size_t c = 0; c < options.combos.size(); ++c) {
      report.grid[{ds.name, report.combos[c]}] =
          MicroPrfAtK(predictions[c], gold);
    }
  }
  ComputeImprovements(report);
  return report;
}

void ComputeImprovements(BenchmarkReport& report) {
  report.improvements.clear();
  bool has_baseline = std::find(report.combos.begin(), report.combos.end(),
                                "B") != report.combos.end();
  if (!has_baseline) return;
  for (const std::string& combo : report.combos) {
    if (combo == "B") continue;
    Improvement imp;
    double sum = 0.0;
    int improved = 0;
    for (const std::string& ds : report.datasets) {
      const EvalResult& base = report.At(ds, "B");
      const EvalResult& enhanced = report.At(ds, combo);
      if (enhanced.f1 > base.f1) ++improved;
      if (base.f1 > 0.0) {
        sum += ImprovementPct(base, enhanced);
        ++imp.datasets_averaged;
      }
    }
    if (imp.datasets_averaged > 0) {
      imp.avg_delta_f1_pct = sum / imp.datasets_averaged;
    }
    if (!report.datasets.empty()) {
      imp.improved_cases_pct = 100.0 * improved / report.datasets.size();
    }
    report.improvements[combo] = imp;
  }
}

}  // namespace keyforge
