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

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "keyforge/errors.h"
#include "keyforge/extract.h"
#include "keyforge/io.h"

namespace keyforge {

void WeightedGraph::AddEdge(size_t u, size_t v, double weight) {
  if (u == v) return;
  auto add = [this](size_t from, size_t to, double w) {
    for (auto& [node, existing] : adjacency[from]) {
      if (node == to) {
        existing += w;
        return;
      }
    }
    adjacency[from].emplace_back(to, w);
  };
  add(u, v, weight);
  add(v, u, weight);
}

std::vector<double> PageRank(const WeightedGraph& graph,
                             const PageRankOptions& options) {
  const size_t n = graph.node_count;
  if (n == 0) throw DegenerateDocumentError("empty co-occurrence graph");
  std::vector<double> strength(n, 0.0);
  for (size_t u = 0; u < n; ++u) {
    for (const auto& [v, w] : graph.adjacency[u]) strength[u] += w;
  }
  const double d = options.damping;
  std::vector<double> rank(n, 1.0 / n);
  std::vector<double> next(n);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    double dangling = 0.0;
    for (size_t u = 0; u < n; ++u) {
      if (strength[u] == 0.0) dangling += rank[u];
    }
    const double base = (1.0 - d) / n + d * dangling / n;
    std::fill(next.begin(), next.end(), base);
    for (size_t u = 0; u < n; ++u) {
      if (strength[u] == 0.0) continue;
      const double share = d * rank[u] / strength[u];
      for (const auto& [v, w] : graph.adjacency[u]) next[v] += share * w;
    }
    double delta = 0.0;
    for (size_t u = 0; u < n; ++u) {
      delta = std::max(delta, std::abs(next[u] - rank[u]));
    }
    rank.swap(next);
    if (delta < options.tolerance) break;
  }
  return rank;
}

void ScoreGraph(const Document& doc, std::vector<CandidateKeyword>& candidates,
                const ExtractorConfig& cfg) {
  cfg.Validate();
  // Nodes are the lowercase forms of candidate words, numbered in order of
  // first appearance so the result does not depend on hashing.
  std::unordered_map<std::string, size_t> node_of;
  std::vector<long> node_at(doc.tokens.size(), -1);
  for (size_t i = 0; i < doc.tokens.size(); ++i) {
    const std::string& surface = doc.tokens[i].surface();
    if (!IsCandidateWord(surface, *cfg.stopwords)) continue;
    auto [it, inserted] = node_of.try_emplace(ToLower(surface), node_of.size());
    node_at[i] = static_cast<long>(it->second);
  }
  WeightedGraph graph;
  graph.node_count = node_of.size();
  graph.adjacency.resize(graph.node_count);
  const auto window = static_cast<size_t>(cfg.window);
  for (const Span& sentence : doc.sentences) {
    for (size_t i = sentence.begin; i < sentence.end; ++i) {
      if (node_at[i] < 0) continue;
      for (size_t j = i + 1; j < sentence.end && j - i < window; ++j) {
        if (node_at[j] < 0) continue;
        graph.AddEdge(node_at[i], node_at[j], 1.0);
      }
    }
  }
  PageRankOptions options;
  options.damping = cfg.damping;
  std::vector<double> rank = PageRank(graph, options);
  for (CandidateKeyword& c : candidates) {
    double sum = 0.0;
    for (const TaggedToken& t : c.tokens) {
      sum += rank[node_of.at(ToLower(t.surface()))];
    }
    c.score = sum;
    c.orientation = Orientation::kHigherIsBetter;
  }
}

}  // namespace keyforge
