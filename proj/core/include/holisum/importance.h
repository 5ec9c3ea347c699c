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

#ifndef HOLISUM_IMPORTANCE_H_
#define HOLISUM_IMPORTANCE_H_

#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "holisum/corpus.h"
#include "holisum/similarity.h"

namespace holisum {

enum class ImportanceKind { kGraph, kExternal };

// Per-sentence and per-subset importance. Graph models use degree
// centrality over the thresholded edges; external models hold scores
// produced by an outside scorer.
class ImportanceModel {
 public:
  static ImportanceModel FromGraph(std::shared_ptr<const SimilarityGraph> graph);
  // Throws InputError on non-finite scores. Negative scores are accepted
  // with a warning.
  static ImportanceModel FromScores(std::string cluster_id,
                                    std::vector<double> scores);

  ImportanceKind kind() const { return kind_; }
  std::size_t size() const { return scores_.size(); }
  const std::string& cluster_id() const { return cluster_id_; }
  std::span<const double> sentence_scores() const { return scores_; }
  // Null for external models.
  const SimilarityGraph* graph() const { return graph_.get(); }

  // Throws std::out_of_range for ids >= size().
  double SentenceImportance(SentenceId id) const;

  // Graph: (1/|S|) * sum of edge weights crossing from `subset` to the rest
  // of the cluster. External: sum of the member scores. Empty subset -> 0.
  double SubsetImportance(std::span<const SentenceId> subset) const;

 private:
  ImportanceKind kind_ = ImportanceKind::kGraph;
  std::string cluster_id_;
  std::vector<double> scores_;
  std::shared_ptr<const SimilarityGraph> graph_;
};

// External importance scores, one JSONL record per cluster.
class ImportanceStore {
 public:
  static ImportanceStore Load(const std::filesystem::path& path);
  static ImportanceStore Parse(std::istream& in);

  bool Contains(const std::string& cluster_id) const;
  // Throws InputError when the cluster is missing or misaligned.
  ImportanceModel For(const DocumentCluster& cluster) const;

 private:
  std::map<std::string, std::vector<double>, std::less<>> scores_;
};

ImportanceModel LoadExternalImportance(const std::filesystem::path& path,
                                       const DocumentCluster& cluster);

}  // namespace holisum

#endif  // HOLISUM_IMPORTANCE_H_
