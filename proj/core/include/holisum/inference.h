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

#ifndef HOLISUM_INFERENCE_H_
#define HOLISUM_INFERENCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holisum/corpus.h"
#include "holisum/importance.h"
#include "holisum/similarity.h"
#include "holisum/sri.h"

namespace holisum {

enum class Method {
  kIndividualGreedy,
  kHolisticGreedy,
  kBeam,
  kExhaustive,
  kOracle,
};

// Canonical names use underscores ("holistic_greedy"); parsing also accepts
// the hyphenated CLI spelling.
std::string_view MethodName(Method method);
std::optional<Method> ParseMethod(std::string_view name);

struct BudgetSpec {
  enum class Mode { kSentenceCount, kWordLimit };

  Mode mode = Mode::kSentenceCount;
  std::size_t n_sentences = 10;
  std::size_t max_words = 0;

  static BudgetSpec Sentences(std::size_t n) {
    return {Mode::kSentenceCount, n, 0};
  }
  static BudgetSpec Words(std::size_t max_words) {
    return {Mode::kWordLimit, 0, max_words};
  }

  bool word_limited() const { return mode == Mode::kWordLimit; }
  // Throws ConfigError unless the active parameter is positive.
  void Validate() const;
};

struct TraceStep {
  std::size_t step = 0;
  std::size_t candidates_scored = 0;
  std::size_t retained = 0;
  double best_score = 0.0;
};

struct SummarySelection {
  std::string cluster_id;
  // Sentence ids in selection order.
  std::vector<SentenceId> selected;
  // SRI of the selected set.
  double score = 0.0;
  Method method = Method::kBeam;
  std::vector<TraceStep> trace;
};

struct SearchOptions {
  bool record_trace = false;
  // Upper bound on subsets enumerated by exhaustive and oracle search.
  std::uint64_t max_subsets = 10'000'000;
};

// Everything a selection method needs to know about one cluster.
struct SelectionProblem {
  const ImportanceModel& importance;
  const SimilarityGraph& graph;
  SriConfig sri;
  BudgetSpec budget;
  // Word count per sentence; required when the budget is word-limited.
  std::span<const std::size_t> word_counts = {};
};

std::vector<std::size_t> WordCounts(const DocumentCluster& cluster);

// Ranks sentences by individual importance (ties to the lower id) and takes
// them in rank order until the budget is met.
SummarySelection IndividualGreedy(const SelectionProblem& problem,
                                  const SearchOptions& options = {});

// Repeatedly adds the sentence that maximizes the SRI of the grown set.
SummarySelection HolisticGreedy(const SelectionProblem& problem,
                                const SearchOptions& options = {});

// Beam search over subsets: each member expands to its `beam_size` best
// single-sentence extensions, duplicates (same id set) are merged, and the
// pooled candidates are pruned back to `beam_size`.
SummarySelection HolisticBeam(const SelectionProblem& problem,
                              std::size_t beam_size,
                              const SearchOptions& options = {});

// Exact search restricted to the `prefilter_size` most important sentences.
// Throws SearchLimitError when the enumeration would exceed
// options.max_subsets.
SummarySelection HolisticExhaustive(const SelectionProblem& problem,
                                    std::size_t prefilter_size,
                                    const SearchOptions& options = {});

// Exact search over the whole cluster.
SummarySelection OracleExact(const SelectionProblem& problem,
                             const SearchOptions& options = {});

// Concatenates the selected sentences in selection order. Word-limited
// budgets truncate the result to exactly max_words whitespace words.
std::string SummaryText(const SummarySelection& selection,
                        const DocumentCluster& cluster,
                        const BudgetSpec& budget);

// C(n, k), saturating at `cap + 1`.
std::uint64_t BinomialCapped(std::uint64_t n, std::uint64_t k,
                             std::uint64_t cap);

}  // namespace holisum

#endif  // HOLISUM_INFERENCE_H_
