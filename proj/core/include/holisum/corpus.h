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

#ifndef HOLISUM_CORPUS_H_
#define HOLISUM_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace holisum {

using SentenceId = std::size_t;

struct SentenceRecord {
  std::string cluster_id;
  std::size_t doc_index = 0;
  std::size_t sent_index = 0;
  // Position in the cluster-wide document-major order.
  SentenceId global_id = 0;
  std::string text;
  std::vector<std::string> tokens;
  // Whitespace-separated words of `text`; at least 1 for loaded sentences.
  std::size_t word_count = 0;

  friend bool operator==(const SentenceRecord&,
                         const SentenceRecord&) = default;
};

struct DocumentCluster {
  std::string cluster_id;
  std::vector<SentenceRecord> sentences;
  std::vector<std::string> references;
  std::size_t n_documents = 0;

  std::size_t size() const { return sentences.size(); }
};

enum class ClusterFormat { kJsonl };

struct LoadStats {
  // Empty or whitespace-only sentences skipped while loading.
  std::size_t dropped_sentences = 0;
};

// Builds a cluster from already segmented documents. Empty and
// whitespace-only sentences are dropped and counted in `stats`.
// Throws InputError when no sentence survives.
DocumentCluster MakeCluster(std::string cluster_id,
                            const std::vector<std::vector<std::string>>& documents,
                            std::vector<std::string> references,
                            LoadStats* stats = nullptr);

// Parses one JSONL cluster stream. Line numbers in error messages are
// 1-based. Blank lines are skipped.
std::vector<DocumentCluster> ParseClusters(std::istream& in,
                                           LoadStats* stats = nullptr);

std::vector<DocumentCluster> LoadClusters(
    const std::filesystem::path& path,
    ClusterFormat format = ClusterFormat::kJsonl, LoadStats* stats = nullptr);

}  // namespace holisum

#endif  // HOLISUM_CORPUS_H_
