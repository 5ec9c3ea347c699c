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

#ifndef HOLISUM_PIPELINE_H_
#define HOLISUM_PIPELINE_H_

#include <array>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "holisum/config.h"
#include "holisum/corpus.h"
#include "holisum/importance.h"
#include "holisum/inference.h"
#include "holisum/report.h"
#include "holisum/similarity.h"

namespace holisum {

// Optional per-cluster side inputs.
struct SideInputs {
  const EmbeddingStore* embeddings = nullptr;
  const ImportanceStore* importance = nullptr;
};

struct ClusterResult {
  SummarySelection selection;
  std::string summary_text;
  double elapsed_ms = 0.0;
};

// Graph and importance model of one cluster under (alpha, theta).
struct ClusterFeatures {
  std::shared_ptr<const SimilarityGraph> graph;
  ImportanceModel importance;
  std::vector<std::size_t> word_counts;
};

ClusterFeatures BuildFeatures(const DocumentCluster& cluster, double alpha,
                              double theta, const SideInputs& side);

// Runs `method` on prepared features.
SummarySelection Select(const ClusterFeatures& features,
                        const RunConfig& config);

// load -> features -> graph -> importance -> inference -> budget.
ClusterResult SummarizeCluster(const DocumentCluster& cluster,
                               const RunConfig& config,
                               const SideInputs& side);

struct SummarizeOutcome {
  // Parallel to the input clusters; empty where the cluster failed and
  // errors were skipped.
  std::vector<std::optional<ClusterResult>> results;
  std::vector<std::string> errors;
};

// Summarizes every cluster on `config.jobs` threads. Results keep input
// order. Without skip_errors the first failing cluster (in input order)
// rethrows its error prefixed by the cluster id.
SummarizeOutcome SummarizeAll(const std::vector<DocumentCluster>& clusters,
                              const RunConfig& config, const SideInputs& side);

// {"id", "selected_ids", "summary_text", "sri_score", "method"
//  [, "elapsed_ms"]} on one line.
std::string SelectionJsonLine(const ClusterResult& result, bool with_timing);

// Loads inputs named in `config`, summarizes, and writes JSONL to `out`.
// Returns the number of clusters that failed (only nonzero with
// skip_errors).
std::size_t RunSummarize(const RunConfig& config, std::ostream& out);

struct SelectionRecord {
  std::string id;
  std::vector<SentenceId> selected_ids;
  std::string summary_text;
};

std::vector<SelectionRecord> ParseSelections(std::istream& in);

// Throws InputError listing selection ids that match no cluster.
EvalReport EvaluateSelections(const std::vector<SelectionRecord>& selections,
                              const std::vector<DocumentCluster>& clusters,
                              const RougeScorer& scorer);

struct SweepGrid {
  std::vector<Method> methods = {Method::kBeam};
  std::vector<double> alphas;
  std::vector<double> thetas;
  std::vector<double> lambdas;
  std::vector<std::size_t> beam_sizes;
};

struct SweepRow {
  Method method = Method::kBeam;
  double alpha = 0.0;
  double theta = 0.0;
  double lambda = 0.0;
  // Only meaningful for beam search.
  std::optional<std::size_t> beam_size;
  std::map<RougeVariant, RougeScore> mean_rouge;
  std::array<double, kMaxDiversityN> mean_uniq_ngram{};
  // Inference time summed over clusters.
  double inference_ms = 0.0;
};

// Empty grid axes fall back to the value in `base`. Rows are ordered by
// alpha, theta, method, lambda, beam size. Throws InputError when no
// cluster has references.
std::vector<SweepRow> RunSweep(const std::vector<DocumentCluster>& clusters,
                               const RunConfig& base, const SweepGrid& grid,
                               const SideInputs& side,
                               const RougeScorer& scorer);

std::string SweepCsv(const std::vector<SweepRow>& rows,
                     const RougeConfig& rouge, bool with_runtime = true);

}  // namespace holisum

#endif  // HOLISUM_PIPELINE_H_
