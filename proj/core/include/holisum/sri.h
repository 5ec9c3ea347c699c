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

#ifndef HOLISUM_SRI_H_
#define HOLISUM_SRI_H_

#include <span>
#include <vector>

#include "holisum/importance.h"
#include "holisum/similarity.h"

namespace holisum {

struct SriConfig {
  // Weight of the redundancy term. Finite and >= 0.
  double lambda = 0.0625;

  // Throws ConfigError.
  void Validate() const;
};

// Sum over members of the edge weight to their most similar fellow member.
// Subsets with fewer than two members have no redundancy.
double Redundancy(const SimilarityGraph& graph,
                  std::span<const SentenceId> subset);

// Subset Representative Index: importance(subset) - lambda * redundancy.
double SriScore(const ImportanceModel& importance, const SimilarityGraph& graph,
                std::span<const SentenceId> subset, const SriConfig& config);

// Strict total order used for every subset comparison: higher score first,
// then the lexicographically smaller sorted id list.
bool PrecedesSubset(double score_a, std::span<const SentenceId> sorted_a,
                    double score_b, std::span<const SentenceId> sorted_b);

// Scores sorted subsets in O(|subset|^2) using precomputed degrees, so that
// search procedures can evaluate many candidates cheaply. The value depends
// only on the set, never on the order it was assembled in.
class SubsetScorer {
 public:
  SubsetScorer(const ImportanceModel& importance, const SimilarityGraph& graph,
               SriConfig config);

  // `sorted` must be strictly increasing.
  double Score(std::span<const SentenceId> sorted) const;
  double Importance(std::span<const SentenceId> sorted) const;
  double Redundancy(std::span<const SentenceId> sorted) const;

  std::size_t size() const { return graph_->n; }
  const SriConfig& config() const { return config_; }

 private:
  const ImportanceModel* importance_;
  const SimilarityGraph* graph_;
  SriConfig config_;
};

}  // namespace holisum

#endif  // HOLISUM_SRI_H_
