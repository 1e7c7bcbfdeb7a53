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

#include "keyforge/context.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"
#include "keyforge/errors.h"
#include "keyforge/io.h"

namespace keyforge {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr char kModelFormat[] = "keyforge-context-model";
constexpr int kModelVersion = 1;

bool IsTfidfByte(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         IsAsciiDigit(c);
}

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

double Dot(const std::vector<double>& w, const SparseVector& x) {
  double s = 0.0;
  for (const auto& [i, v] : x) s += w[i] * v;
  return s;
}

// Uniform double in [0, 1) from the top 53 bits.
double UnitDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Gradient {
  std::vector<double> w;
  double b = 0.0;
  double norm = 0.0;
};

// Gradient of mean log-loss + l2/2 |w|^2 at (w, b).
Gradient LossGradient(const std::vector<SparseVector>& x,
                      const std::vector<double>& y, const std::vector<double>& w,
                      double b, double l2) {
  Gradient g;
  g.w.assign(w.size(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    // d/dz log(1 + exp(-y z)) = -y * sigmoid(-y z)
    double coef = -y[i] * Sigmoid(-y[i] * (Dot(w, x[i]) + b)) * inv_n;
    for (const auto& [j, v] : x[i]) g.w[j] += coef * v;
    g.b += coef;
  }
  double sq = g.b * g.b;
  for (size_t j = 0; j < w.size(); ++j) {
    g.w[j] += l2 * w[j];
    sq += g.w[j] * g.w[j];
  }
  g.norm = std::sqrt(sq);
  return g;
}

BinaryModel TrainBinary(const std::vector<SparseVector>& x,
                        const std::vector<double>& y, size_t dim,
                        const TrainOptions& options, std::mt19937_64& rng) {
  double max_sq = 0.0;
  for (const SparseVector& row : x) {
    double sq = 0.0;
    for (const auto& [j, v] : row) sq += v * v;
    max_sq = std::max(max_sq, sq);
  }
  // Lipschitz bound of the gradient; the bias acts as a constant feature.
  const double step = 1.0 / (0.25 * (max_sq + 1.0) + options.l2);

  BinaryModel m;
  m.weights.resize(dim);
  for (double& v : m.weights) v = (UnitDouble(rng) - 0.5) * 0.02;
  m.bias = 0.0;
  std::vector<double> prev_w = m.weights;
  double prev_b = m.bias;
  std::vector<double> yw(dim);
  double t = 1.0;
  for (int epoch = 1; epoch <= options.max_epochs; ++epoch) {
    double t_next = (1.0 + std::sqrt(1.0 + 4.0 * t * t)) / 2.0;
    double beta = (t - 1.0) / t_next;
    for (size_t j = 0; j < dim; ++j) {
      yw[j] = m.weights[j] + beta * (m.weights[j] - prev_w[j]);
    }
    double yb = m.bias + beta * (m.bias - prev_b);
    Gradient g = LossGradient(x, y, yw, yb, options.l2);
    m.epochs = epoch;
    if (g.norm < options.gradient_tolerance) {
      m.weights = yw;
      m.bias = yb;
      m.converged = true;
      break;
    }
    prev_w.swap(m.weights);
    prev_b = m.bias;
    double progress = 0.0;
    for (size_t j = 0; j < dim; ++j) {
      m.weights[j] = yw[j] - step * g.w[j];
      progress += g.w[j] * (m.weights[j] - prev_w[j]);
    }
    m.bias = yb - step * g.b;
    progress += g.b * (m.bias - prev_b);
    // Adaptive restart: drop momentum when it points uphill.
    t = progress > 0.0 ? 1.0 : t_next;
  }
  return m;
}

std::map<std::string, std::vector<size_t>> IndicesByLabel(
    std::span<const LabeledText> data) {
  std::map<std::string, std::vector<size_t>> by_label;
  for (size_t i = 0; i < data.size(); ++i) by_label[data[i].label].push_back(i);
  return by_label;
}

}  // namespace

std::vector<LabeledText> ParseLabeledCorpus(std::string_view content) {
  std::vector<LabeledText> out;
  std::vector<size_t> bad;
  size_t line_no = 0;
  for (std::string_view line : SplitLines(content)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto fields = SplitOn(line, '\t');
    if (fields.size() != 3 || Trim(fields[0]).empty()) {
      bad.push_back(line_no);
      continue;
    }
    out.push_back({std::string(Trim(fields[0])),
                   std::string(Trim(fields[1])) + " " +
                       std::string(Trim(fields[2]))});
  }
  if (!bad.empty()) {
    std::string lines;
    for (size_t i = 0; i < bad.size() && i < 20; ++i) {
      if (i) lines += ", ";
      lines += std::to_string(bad[i]);
    }
    if (bad.size() > 20) lines += ", ...";
    throw FormatError("expected label<TAB>title<TAB>abstract on line(s) " +
                      lines);
  }
  return out;
}

std::vector<LabeledText> LoadLabeledCorpus(const fs::path& path) {
  try {
    return ParseLabeledCorpus(ReadTextFile(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> TfidfTokens(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsTfidfByte(text[i])) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && IsTfidfByte(text[i])) ++i;
    if (i - start >= 2) tokens.push_back(ToLower(text.substr(start, i - start)));
  }
  return tokens;
}

TfidfVocabulary::TfidfVocabulary(std::vector<std::string> terms,
                                 std::vector<double> idf, int64_t doc_count)
    : terms_(std::move(terms)), idf_(std::move(idf)), doc_count_(doc_count) {
  if (terms_.size() != idf_.size()) {
    throw FormatError("vocabulary and idf sizes differ");
  }
  for (size_t i = 0; i < terms_.size(); ++i) {
    index_.emplace(terms_[i], static_cast<uint32_t>(i));
  }
}

TfidfVocabulary TfidfVocabulary::Fit(std::span<const std::string> texts) {
  std::map<std::string, int64_t> df;
  for (const std::string& text : texts) {
    auto tokens = TfidfTokens(text);
    std::set<std::string> distinct(tokens.begin(), tokens.end());
    for (const std::string& t : distinct) ++df[t];
  }
  if (df.empty()) throw EmptyCorpusError("no tokens in training texts");
  const auto n = static_cast<double>(texts.size());
  std::vector<std::string> terms;
  std::vector<double> idf;
  for (const auto& [term, count] : df) {
    terms.push_back(term);
    idf.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }
  return TfidfVocabulary(std::move(terms), std::move(idf),
                         static_cast<int64_t>(texts.size()));
}

std::optional<uint32_t> TfidfVocabulary::IndexOf(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector TfidfVocabulary::Transform(std::string_view text) const {
  std::map<uint32_t, double> counts;
  for (const std::string& t : TfidfTokens(text)) {
    if (auto idx = IndexOf(t)) counts[*idx] += 1.0;
  }
  SparseVector v;
  double sq = 0.0;
  for (const auto& [idx, tf] : counts) {
    double value = tf * idf_[idx];
    v.emplace_back(idx, value);
    sq += value * value;
  }
  if (sq > 0.0) {
    double norm = std::sqrt(sq);
    for (auto& [idx, value] : v) value /= norm;
  }
  return v;
}

ContextClassifier::ContextClassifier(TfidfVocabulary vocab,
                                     std::vector<std::string> classes,
                                     std::vector<BinaryModel> models)
    : vocab_(std::move(vocab)),
      classes_(std::move(classes)),
      models_(std::move(models)) {
  if (classes_.size() != models_.size()) {
    throw FormatError("one model per class required");
  }
  for (const BinaryModel& m : models_) {
    if (m.weights.size() != vocab_.size()) {
      throw FormatError("model weight length differs from vocabulary size");
    }
  }
}

std::vector<double> ContextClassifier::ClassScores(
    const SparseVector& features) const {
  std::vector<double> scores;
  scores.reserve(models_.size());
  for (const BinaryModel& m : models_) {
    scores.push_back(Sigmoid(Dot(m.weights, features) + m.bias));
  }
  return scores;
}

Prediction ContextClassifier::Predict(std::string_view text) const {
  SparseVector features = vocab_.Transform(text);
  std::vector<double> scores = ClassScores(features);
  Prediction p;
  if (scores.empty()) return p;
  size_t best = 0;
  for (size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  p.label = classes_[best];
  p.confidence = scores[best];
  p.low_confidence = features.empty();
  return p;
}

std::string ContextClassifier::ToJson() const {
  json models = json::array();
  for (size_t c = 0; c < classes_.size(); ++c) {
    models.push_back({{"label", classes_[c]},
                      {"bias", models_[c].bias},
                      {"epochs", models_[c].epochs},
                      {"converged", models_[c].converged},
                      {"weights", models_[c].weights}});
  }
  json doc = {{"format", kModelFormat},
              {"version", kModelVersion},
              {"doc_count", vocab_.doc_count()},
              {"vocabulary", vocab_.terms()},
              {"idf", vocab_.idf()},
              {"classes", classes_},
              {"models", models}};
  return doc.dump(1) + "\n";
}

ContextClassifier ContextClassifier::FromJson(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (doc.at("format") != kModelFormat ||
        doc.at("version") != kModelVersion) {
      throw FormatError("not a keyforge context model (version 1)");
    }
    TfidfVocabulary vocab(doc.at("vocabulary").get<std::vector<std::string>>(),
                          doc.at("idf").get<std::vector<double>>(),
                          doc.at("doc_count").get<int64_t>());
    auto classes = doc.at("classes").get<std::vector<std::string>>();
    std::vector<BinaryModel> models;
    for (const json& m : doc.at("models")) {
      BinaryModel bm;
      bm.weights = m.at("weights").get<std::vector<double>>();
      bm.bias = m.at("bias").get<double>();
      bm.epochs = m.at("epochs").get<int>();
      bm.converged = m.at("converged").get<bool>();
      models.push_back(std::move(bm));
    }
    return ContextClassifier(std::move(vocab), std::move(classes),
                             std::move(models));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed context model: ") + e.what());
  }
}

void ContextClassifier::Save(const fs::path& path) const {
  WriteTextFile(path, ToJson());
}

ContextClassifier ContextClassifier::Load(const fs::path& path) {
  try {
    return FromJson(ReadTextFile(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

uint64_t UniformBelow(std::mt19937_64& rng, uint64_t n) {
  // Rejection sampling over the largest multiple of n.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

std::vector<LabeledText> Downsample(std::span<const LabeledText> labeled,
                                    uint64_t seed) {
  auto by_label = IndicesByLabel(labeled);
  if (by_label.size() < 2) {
    throw InsufficientDataError("downsampling needs at least two classes");
  }
  size_t smallest = SIZE_MAX;
  for (const auto& [label, idx] : by_label) {
    smallest = std::min(smallest, idx.size());
  }
  std::mt19937_64 rng(seed);
  std::vector<size_t> keep;
  for (auto& [label, idx] : by_label) {
    SeededShuffle(idx, rng);
    keep.insert(keep.end(), idx.begin(), idx.begin() + smallest);
  }
  std::sort(keep.begin(), keep.end());
  std::vector<LabeledText> out;
  out.reserve(keep.size());
  for (size_t i : keep) out.push_back(labeled[i]);
  return out;
}

ContextClassifier TrainOvr(std::span<const LabeledText> data,
                           const TfidfVocabulary& vocab,
                           const TrainOptions& options) {
  auto by_label = IndicesByLabel(data);
  if (by_label.size() < 2) {
    throw InsufficientDataError("training needs at least two classes");
  }
  std::vector<SparseVector> x;
  x.reserve(data.size());
  for (const LabeledText& item : data) x.push_back(vocab.Transform(item.text));

  std::mt19937_64 rng(options.seed);
  std::vector<std::string> classes;
  std::vector<BinaryModel> models;
  std::vector<std::string> unconverged;
  for (const auto& [label, idx] : by_label) {
    std::vector<double> y(data.size(), -1.0);
    for (size_t i : idx) y[i] = 1.0;
    models.push_back(TrainBinary(x, y, vocab.size(), options, rng));
    classes.push_back(label);
    if (!models.back().converged) unconverged.push_back(label);
  }
  if (!unconverged.empty()) {
    std::string names;
    for (const std::string& l : unconverged) names += (names.empty() ? "" : ", ") + l;
    Warn("ConvergenceWarning: gradient norm still above " +
         std::to_string(options.gradient_tolerance) + " after " +
         std::to_string(options.max_epochs) + " epochs for class(es) " + names);
  }
  return ContextClassifier(vocab, std::move(classes), std::move(models));
}

ContextClassifier TrainContextClassifier(std::span<const LabeledText> data,
                                         const TrainOptions& options) {
  std::vector<std::string> texts;
  texts.reserve(data.size());
  for (const LabeledText& item : data) texts.push_back(item.text);
  return TrainOvr(data, TfidfVocabulary::Fit(texts), options);
}

std::vector<int> StratifiedFolds(std::span<const LabeledText> data, int folds,
                                 uint64_t seed) {
  if (folds < 2) throw ConfigError("need at least 2 folds");
  auto by_label = IndicesByLabel(data);
  if (by_label.size() < 2) {
    throw InsufficientDataError("cross-validation needs at least two classes");
  }
  for (const auto& [label, idx] : by_label) {
    if (idx.size() < static_cast<size_t>(folds)) {
      throw InsufficientDataError("class '" + label + "' has " +
                                  std::to_string(idx.size()) +
                                  " samples, fewer than " +
                                  std::to_string(folds) + " folds");
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<int> fold_of(data.size());
  int next = 0;
  for (auto& [label, idx] : by_label) {
    SeededShuffle(idx, rng);
    // Continue dealing where the previous class stopped so fold sizes stay
    // balanced overall.
    for (size_t i : idx) {
      fold_of[i] = next;
      next = (next + 1) % folds;
    }
  }
  return fold_of;
}

CrossValidationResult CrossValidate(std::span<const LabeledText> data,
                                    int folds, const TrainOptions& options) {
  std::vector<int> fold_of = StratifiedFolds(data, folds, options.seed);
  CrossValidationResult result;
  double sum = 0.0;
  for (int f = 0; f < folds; ++f) {
    std::vector<LabeledText> train;
    std::vector<const LabeledText*> test;
    for (size_t i = 0; i < data.size(); ++i) {
      if (fold_of[i] == f) {
        test.push_back(&data[i]);
      } else {
        train.push_back(data[i]);
      }
    }
    ContextClassifier clf = TrainContextClassifier(train, options);
    size_t correct = 0;
    for (const LabeledText* item : test) {
      if (clf.Predict(item->text).label == item->label) ++correct;
    }
    double acc = test.empty() ? 0.0
                              : static_cast<double>(correct) / test.size();
    result.fold_accuracy.push_back(acc);
    sum += acc;
  }
  result.mean_accuracy = sum / folds;
  return result;
}

ContextLookup LoadContextLookup(const fs::path& path) {
  std::string content = ReadTextFile(path);
  ContextLookup lookup;
  size_t line_no = 0;
  for (std::string_view line : SplitLines(content)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos || Trim(line.substr(0, eq)).empty() ||
        Trim(line.substr(eq + 1)).empty()) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": expected label=path");
    }
    fs::path target(std::string(Trim(line.substr(eq + 1))));
    if (target.is_relative()) target = path.parent_path() / target;
    lookup[std::string(Trim(line.substr(0, eq)))] = target;
  }
  return lookup;
}

void CheckLookupCovers(const ContextClassifier& clf,
                       const ContextLookup& lookup) {
  std::string missing;
  for (const std::string& label : clf.classes()) {
    if (!lookup.count(label)) missing += (missing.empty() ? "" : ", ") + label;
  }
  if (!missing.empty()) {
    throw ConfigError("context lookup has no thesaurus for label(s) " + missing);
  }
}

ThesaurusRouter::ThesaurusRouter(ContextLookup lookup, const TextProcessor& text)
    : lookup_(std::move(lookup)), text_(text) {}

std::shared_ptr<const Thesaurus> ThesaurusRouter::Route(
    const std::string& label) {
  auto entry = lookup_.find(label);
  if (entry == lookup_.end()) {
    throw UnknownLabelError("no thesaurus for context '" + label + "'");
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(label);
  if (it != cache_.end()) return it->second;
  auto thesaurus =
      std::make_shared<const Thesaurus>(LoadThesaurus(entry->second, text_));
  cache_.emplace(label, thesaurus);
  return thesaurus;
}

}  // namespace keyforge
