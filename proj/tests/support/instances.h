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

#ifndef HOLISUM_TESTS_SUPPORT_INSTANCES_H_
#define HOLISUM_TESTS_SUPPORT_INSTANCES_H_

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "holisum/importance.h"
#include "holisum/inference.h"
#include "holisum/similarity.h"
#include "holisum/sri.h"

namespace holisum::testing {

// A random selection problem with its own storage.
struct RandomInstance {
  std::shared_ptr<const SimilarityGraph> graph;
  ImportanceModel importance;
  SriConfig sri;
  BudgetSpec budget;
  std::vector<std::size_t> word_counts;

  SelectionProblem problem() const {
    return {importance, *graph, sri, budget, word_counts};
  }
};

struct InstanceShape {
  std::size_t min_n = 4;
  std::size_t max_n = 12;
  std::size_t max_budget = 4;
  bool allow_external = true;
};

// Symmetric uniform [0,1) similarities, random theta in [0, 0.5], random
// lambda in [0, 2], graph or external importance.
RandomInstance MakeRandomInstance(std::mt19937_64& rng,
                                  const InstanceShape& shape = {});

SquareMatrix RandomSimilarities(std::mt19937_64& rng, std::size_t n,
                                double lo = 0.0, double hi = 1.0);

// Exhaustive reference search written without the library's search code:
// enumerates bitmasks of size `k`, scores with SriScore, and keeps the best
// under (higher score, lexicographically smaller ids).
struct BruteForceResult {
  std::vector<SentenceId> subset;
  double score = 0.0;
  std::size_t enumerated = 0;
};
BruteForceResult BruteForceBest(const ImportanceModel& importance,
                                const SimilarityGraph& graph,
                                const SriConfig& sri, std::size_t k);

// Reference cut weight (1/n) * sum_{i in S, j not in S} e_ij computed by
// scanning all ordered pairs.
double CutImportance(const SimilarityGraph& graph,
                     const std::vector<SentenceId>& subset);

}  // namespace holisum::testing

#endif  // HOLISUM_TESTS_SUPPORT_INSTANCES_H_
