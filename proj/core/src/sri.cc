// Copyright 2026 The Holisum Authors.
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

#include "holisum/sri.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "holisum/error.h"

namespace holisum {

void SriConfig::Validate() const {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw ConfigError("lambda must be finite and >= 0, got " +
                      std::to_string(lambda));
  }
}

double Redundancy(const SimilarityGraph& graph,
                  std::span<const SentenceId> subset) {
  if (subset.size() < 2) return 0.0;
  double total = 0.0;
  for (SentenceId i : subset) {
    double best = 0.0;
    for (SentenceId j : subset) {
      if (j != i) best = std::max(best, graph.edges(i, j));
    }
    total += best;
  }
  return total;
}

double SriScore(const ImportanceModel& importance, const SimilarityGraph& graph,
                std::span<const SentenceId> subset, const SriConfig& config) {
  if (subset.empty()) return 0.0;
  return importance.SubsetImportance(subset) -
         config.lambda * Redundancy(graph, subset);
}

bool PrecedesSubset(double score_a, std::span<const SentenceId> sorted_a,
                    double score_b, std::span<const SentenceId> sorted_b) {
  if (score_a != score_b) return score_a > score_b;
  return std::lexicographical_compare(sorted_a.begin(), sorted_a.end(),
                                      sorted_b.begin(), sorted_b.end());
}

SubsetScorer::SubsetScorer(const ImportanceModel& importance,
                           const SimilarityGraph& graph, SriConfig config)
    : importance_(&importance), graph_(&graph), config_(config) {
  config_.Validate();
  if (importance.size() != graph.n) {
    throw InputError("importance model covers " +
                     std::to_string(importance.size()) +
                     " sentences but the graph has " + std::to_string(graph.n));
  }
}

double SubsetScorer::Importance(std::span<const SentenceId> sorted) const {
  if (sorted.empty()) return 0.0;
  const auto scores = importance_->sentence_scores();
  double degree_sum = 0.0;
  for (SentenceId i : sorted) degree_sum += scores[i];
  if (importance_->kind() == ImportanceKind::kExternal) return degree_sum;
  // Cut weight = sum of member degrees minus twice the internal edge mass.
  double internal = 0.0;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      internal += graph_->edges(sorted[a], sorted[b]);
    }
  }
  return (degree_sum - 2.0 * internal) / static_cast<double>(graph_->n);
}

double SubsetScorer::Redundancy(std::span<const SentenceId> sorted) const {
  return holisum::Redundancy(*graph_, sorted);
}

double SubsetScorer::Score(std::span<const SentenceId> sorted) const {
  if (sorted.empty()) return 0.0;
  return Importance(sorted) - config_.lambda * Redundancy(sorted);
}

}  // namespace holisum
