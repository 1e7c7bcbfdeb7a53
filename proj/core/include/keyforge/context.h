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

// Context identification: TF-IDF features, one-vs-rest logistic models,
// balanced downsampling, stratified cross-validation and label-to-thesaurus
// routing.

#ifndef KEYFORGE_CONTEXT_H_
#define KEYFORGE_CONTEXT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "keyforge/corpus.h"
#include "keyforge/document.h"

namespace keyforge {

struct LabeledText {
  std::string label;
  std::string text;

  bool operator==(const LabeledText&) const = default;
};

// `label<TAB>title<TAB>abstract` per line; the text is title + " " +
// abstract. Blank lines are skipped. Throws FormatError listing every
// malformed line number.
std::vector<LabeledText> LoadLabeledCorpus(const std::filesystem::path& path);
std::vector<LabeledText> ParseLabeledCorpus(std::string_view content);

// Lowercase runs of letters and digits of length >= 2.
std::vector<std::string> TfidfTokens(std::string_view text);

// (feature index, value) pairs sorted by index.
using SparseVector = std::vector<std::pair<uint32_t, double>>;

class TfidfVocabulary {
 public:
  TfidfVocabulary() = default;
  TfidfVocabulary(std::vector<std::string> terms, std::vector<double> idf,
                  int64_t doc_count);

  // idf(t) = ln((1 + N) / (1 + df(t))) + 1. Terms are indexed in
  // lexicographic order. Throws EmptyCorpusError if no text has a token.
  static TfidfVocabulary Fit(std::span<const std::string> texts);

  // L2-normalized tf * idf; out-of-vocabulary tokens are ignored, so an
  // all-OOV text maps to the zero vector.
  SparseVector Transform(std::string_view text) const;

  std::optional<uint32_t> IndexOf(std::string_view term) const;
  size_t size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<double>& idf() const { return idf_; }
  int64_t doc_count() const { return doc_count_; }

 private:
  std::vector<std::string> terms_;
  std::vector<double> idf_;
  std::unordered_map<std::string, uint32_t> index_;
  int64_t doc_count_ = 0;
};

struct TrainOptions {
  double l2 = 1e-4;
  double gradient_tolerance = 1e-5;
  int max_epochs = 500;
  uint64_t seed = 0;
};

struct BinaryModel {
  std::vector<double> weights;
  double bias = 0.0;
  int epochs = 0;
  bool converged = false;
};

struct Prediction {
  std::string label;
  double confidence = 0.0;
  // True when no feature of the text is in the vocabulary.
  bool low_confidence = false;
};

class ContextClassifier {
 public:
  ContextClassifier() = default;
  ContextClassifier(TfidfVocabulary vocab, std::vector<std::string> classes,
                    std::vector<BinaryModel> models);

  // Sigmoid score of each class, in class order.
  std::vector<double> ClassScores(const SparseVector& features) const;
  // Argmax over class scores; ties go to the earlier class.
  Prediction Predict(std::string_view text) const;

  // JSON document with vocabulary, idf, classes and per-class weights.
  std::string ToJson() const;
  // Throws FormatError on malformed content.
  static ContextClassifier FromJson(std::string_view json);
  void Save(const std::filesystem::path& path) const;
  static ContextClassifier Load(const std::filesystem::path& path);

  const TfidfVocabulary& vocab() const { return vocab_; }
  const std::vector<std::string>& classes() const { return classes_; }
  const std::vector<BinaryModel>& models() const { return models_; }

 private:
  TfidfVocabulary vocab_;
  std::vector<std::string> classes_;
  std::vector<BinaryModel> models_;
};

// Integer in [0, n) from a 64-bit engine, identical on every platform.
uint64_t UniformBelow(std::mt19937_64& rng, uint64_t n);
// Fisher-Yates with UniformBelow.
template <typename T>
void SeededShuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[UniformBelow(rng, i)]);
  }
}

// Reduces every class to the size of the smallest by seeded sampling
// without replacement. Selected items keep their input order. Throws
// InsufficientDataError with fewer than two classes.
std::vector<LabeledText> Downsample(std::span<const LabeledText> labeled,
                                    uint64_t seed);

// One logistic model per class (sorted labels), minimizing mean log-loss +
// l2/2 * |w|^2 by Nesterov-accelerated full-batch gradient descent from a
// seeded initialization. Warns when a model stops at max_epochs.
ContextClassifier TrainOvr(std::span<const LabeledText> data,
                           const TfidfVocabulary& vocab,
                           const TrainOptions& options);

// Fit vocabulary on `data` and train.
ContextClassifier TrainContextClassifier(std::span<const LabeledText> data,
                                         const TrainOptions& options);

// Fold index of each sample. Each class is shuffled with the seed and dealt
// round-robin, so every fold gets floor or ceil of its class share.
std::vector<int> StratifiedFolds(std::span<const LabeledText> data, int folds,
                                 uint64_t seed);

struct CrossValidationResult {
  std::vector<double> fold_accuracy;
  double mean_accuracy = 0.0;
};

// Stratified k-fold: per fold, fit TF-IDF and models on the other folds
// and score accuracy on the held-out fold. Throws InsufficientDataError
// when a class has fewer than `folds` samples or only one class exists.
CrossValidationResult CrossValidate(std::span<const LabeledText> data,
                                    int folds, const TrainOptions& options);

using ContextLookup = std::map<std::string, std::filesystem::path>;

// `label=path` lines; relative paths resolve against the file's directory.
ContextLookup LoadContextLookup(const std::filesystem::path& path);

// Throws ConfigError naming labels of `clf` missing from `lookup`.
void CheckLookupCovers(const ContextClassifier& clf,
                       const ContextLookup& lookup);

// Loads thesauri on first use and caches them. Thread-safe.
class ThesaurusRouter {
 public:
  ThesaurusRouter(ContextLookup lookup, const TextProcessor& text);

  // Throws UnknownLabelError for a label absent from the lookup.
  std::shared_ptr<const Thesaurus> Route(const std::string& label);

  const ContextLookup& lookup() const { return lookup_; }

 private:
  ContextLookup lookup_;
  const TextProcessor& text_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const Thesaurus>> cache_;
};

}  // namespace keyforge

#endif  // KEYFORGE_CONTEXT_H_
