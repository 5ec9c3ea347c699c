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

#ifndef HOLISUM_SIMILARITY_H_
#define HOLISUM_SIMILARITY_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holisum/corpus.h"

namespace holisum {

// Sparse TF-IDF vector with entries sorted by term id. Either all-zero or
// unit L2 norm.
struct TfidfVector {
  std::vector<std::pair<std::uint32_t, double>> weights;
  double norm = 0.0;

  bool empty() const { return weights.empty(); }
  double Dot(const TfidfVector& other) const;
};

// Per-cluster TF-IDF model: every sentence is a document and the cluster is
// the corpus. idf(t) = ln((1 + N) / (1 + df(t))) + 1, tf is the raw count.
struct TfidfModel {
  std::vector<std::string> vocabulary;
  std::vector<std::size_t> document_frequency;
  std::vector<double> idf;
  std::vector<TfidfVector> vectors;

  std::optional<double> Idf(std::string_view term) const;
};

TfidfModel BuildTfidf(const DocumentCluster& cluster);

// Row-major matrix of unit-norm sentence embeddings in global_id order.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;

  // Validates and L2-normalizes `rows`. Throws InputError on ragged rows,
  // non-finite values, zero rows, or a dim that disagrees with the rows.
  static EmbeddingMatrix FromRows(std::string cluster_id, std::size_t dim,
                                  const std::vector<std::vector<double>>& rows);

  const std::string& cluster_id() const { return cluster_id_; }
  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return rows_; }
  std::span<const double> Row(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }

 private:
  std::string cluster_id_;
  std::size_t dim_ = 0;
  std::size_t rows_ = 0;
  std::vector<double> data_;
};

// All clusters of one embedding JSONL file, keyed by cluster id.
class EmbeddingStore {
 public:
  static EmbeddingStore Load(const std::filesystem::path& path);
  static EmbeddingStore Parse(std::istream& in);

  bool Contains(const std::string& cluster_id) const;
  // Returns the matrix for `cluster` after checking row alignment. Throws
  // InputError when the cluster is absent or the row count differs.
  const EmbeddingMatrix& For(const DocumentCluster& cluster) const;
  std::size_t size() const { return matrices_.size(); }

 private:
  std::map<std::string, EmbeddingMatrix, std::less<>> matrices_;
};

// Loads the embeddings of `cluster` from an embedding JSONL file.
EmbeddingMatrix LoadEmbeddings(const std::filesystem::path& path,
                               const DocumentCluster& cluster);

// alpha * <c_i, c_j> + (1 - alpha) * <r_i, r_j>. When either embedding span
// is empty the embedding term is dropped and alpha is taken as 1.
double CombinedSimilarity(const TfidfVector& c_i, const TfidfVector& c_j,
                          std::span<const double> r_i,
                          std::span<const double> r_j, double alpha);

class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0)
      : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::span<const double> Row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct SimilarityGraph {
  std::string cluster_id;
  std::size_t n = 0;
  // Combined similarities; diagonal is 0.
  SquareMatrix raw;
  // max(raw - threshold_value, 0) off the diagonal, 0 on it.
  SquareMatrix edges;
  double theta = 0.0;
  // Effective blend weight (1 when no embeddings were supplied).
  double alpha = 1.0;
  double threshold_value = 0.0;

  double edge(std::size_t i, std::size_t j) const { return edges(i, j); }
};

// min + theta * (max - min) over the off-diagonal entries of `raw`; 0 for
// matrices smaller than 2x2.
double EdgeThreshold(const SquareMatrix& raw, double theta);

// Builds a graph from a symmetric matrix of combined similarities. The
// diagonal of `raw` is ignored and reset to 0.
SimilarityGraph GraphFromSimilarities(std::string cluster_id, SquareMatrix raw,
                                      double alpha, double theta);

// Combined similarity graph of one cluster. `embeddings` may be null, in
// which case alpha is treated as 1 and a warning is logged if alpha < 1.
SimilarityGraph BuildGraph(const DocumentCluster& cluster,
                           const TfidfModel& tfidf,
                           const EmbeddingMatrix* embeddings, double alpha,
                           double theta);

}  // namespace holisum

#endif  // HOLISUM_SIMILARITY_H_
