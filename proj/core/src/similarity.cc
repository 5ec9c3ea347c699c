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

#include "holisum/similarity.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <unordered_map>

#include "holisum/error.h"
#include "holisum/log.h"
#include "json.hpp"

namespace holisum {
namespace {

using nlohmann::json;

double ReadNumber(const json& value, const std::string& where) {
  double x = std::numeric_limits<double>::quiet_NaN();
  if (value.is_number()) {
    x = value.get<double>();
  } else if (value.is_string()) {
    // Lenient about "NaN"/"Infinity" spellings so they are reported as
    // non-finite rather than as type errors.
    const std::string s = value.get<std::string>();
    char* end = nullptr;
    x = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
      throw InputError(where + ": expected a number, got \"" + s + "\"");
    }
  } else {
    throw InputError(where + ": expected a number");
  }
  if (!std::isfinite(x)) throw InputError(where + ": non-finite value");
  return x;
}

void CheckUnitInterval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ConfigError(std::string(name) + " must lie in [0, 1], got " +
                      std::to_string(value));
  }
}

}  // namespace

double TfidfVector::Dot(const TfidfVector& other) const {
  double sum = 0.0;
  auto a = weights.begin();
  auto b = other.weights.begin();
  while (a != weights.end() && b != other.weights.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

std::optional<double> TfidfModel::Idf(std::string_view term) const {
  auto it = std::find(vocabulary.begin(), vocabulary.end(), term);
  if (it == vocabulary.end()) return std::nullopt;
  return idf[static_cast<std::size_t>(it - vocabulary.begin())];
}

TfidfModel BuildTfidf(const DocumentCluster& cluster) {
  TfidfModel model;
  std::unordered_map<std::string, std::uint32_t> term_ids;
  // Term ids are assigned in order of first occurrence, so the model is a
  // pure function of the cluster.
  std::vector<std::vector<std::pair<std::uint32_t, double>>> counts;
  counts.reserve(cluster.size());
  for (const auto& sentence : cluster.sentences) {
    std::map<std::uint32_t, double> tf;
    for (const auto& token : sentence.tokens) {
      auto [it, inserted] = term_ids.try_emplace(
          token, static_cast<std::uint32_t>(model.vocabulary.size()));
      if (inserted) {
        model.vocabulary.push_back(token);
        model.document_frequency.push_back(0);
      }
      tf[it->second] += 1.0;
    }
    for (const auto& [term, _] : tf) ++model.document_frequency[term];
    counts.emplace_back(tf.begin(), tf.end());
  }

  const double n_docs = static_cast<double>(cluster.size());
  model.idf.resize(model.vocabulary.size());
  for (std::size_t t = 0; t < model.idf.size(); ++t) {
    model.idf[t] =
        std::log((1.0 + n_docs) /
                 (1.0 + static_cast<double>(model.document_frequency[t]))) +
        1.0;
  }

  model.vectors.reserve(counts.size());
  for (auto& entries : counts) {
    TfidfVector vec;
    double sq = 0.0;
    for (auto& [term, weight] : entries) {
      weight *= model.idf[term];
      sq += weight * weight;
    }
    if (sq > 0.0) {
      const double norm = std::sqrt(sq);
      for (auto& entry : entries) entry.second /= norm;
      vec.norm = 1.0;
    }
    vec.weights = std::move(entries);
    model.vectors.push_back(std::move(vec));
  }
  return model;
}

EmbeddingMatrix EmbeddingMatrix::FromRows(
    std::string cluster_id, std::size_t dim,
    const std::vector<std::vector<double>>& rows) {
  if (dim == 0) {
    throw InputError("cluster " + cluster_id + ": embedding dim must be > 0");
  }
  EmbeddingMatrix m;
  m.cluster_id_ = std::move(cluster_id);
  m.dim_ = dim;
  m.rows_ = rows.size();
  m.data_.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != dim) {
      throw InputError("cluster " + m.cluster_id_ + ": embedding row " +
                       std::to_string(i) + " has dim " +
                       std::to_string(row.size()) + ", expected " +
                       std::to_string(dim));
    }
    double sq = 0.0;
    for (double x : row) {
      if (!std::isfinite(x)) {
        throw InputError("cluster " + m.cluster_id_ + ": embedding row " +
                         std::to_string(i) + " has a non-finite value");
      }
      sq += x * x;
    }
    if (sq == 0.0) {
      throw InputError("cluster " + m.cluster_id_ + ": embedding row " +
                       std::to_string(i) + " is all zeros");
    }
    const double norm = std::sqrt(sq);
    for (double x : row) m.data_.push_back(x / norm);
  }
  return m;
}

EmbeddingStore EmbeddingStore::Parse(std::istream& in) {
  EmbeddingStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const std::string where = "embeddings line " + std::to_string(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError(where + ": malformed JSON (" + e.what() + ")");
    }
    if (!obj.is_object() || !obj.contains("cluster_id") ||
        !obj["cluster_id"].is_string() || !obj.contains("vectors") ||
        !obj["vectors"].is_array()) {
      throw InputError(where +
                       ": expected {\"cluster_id\", \"dim\", \"vectors\"}");
    }
    std::string id = obj["cluster_id"].get<std::string>();
    std::vector<std::vector<double>> rows;
    rows.reserve(obj["vectors"].size());
    for (const auto& row : obj["vectors"]) {
      if (!row.is_array()) throw InputError(where + ": vector rows must be arrays");
      std::vector<double> values;
      values.reserve(row.size());
      for (const auto& v : row) values.push_back(ReadNumber(v, where));
      rows.push_back(std::move(values));
    }
    std::size_t dim = rows.empty() ? 0 : rows.front().size();
    if (auto it = obj.find("dim"); it != obj.end()) {
      if (!it->is_number_integer() || it->get<long long>() <= 0) {
        throw InputError(where + ": \"dim\" must be a positive integer");
      }
      dim = it->get<std::size_t>();
    }
    auto matrix = EmbeddingMatrix::FromRows(id, dim, rows);
    if (!store.matrices_.emplace(id, std::move(matrix)).second) {
      throw InputError(where + ": duplicate cluster_id " + id);
    }
  }
  return store;
}

EmbeddingStore EmbeddingStore::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open embedding file " + path.string());
  return Parse(in);
}

bool EmbeddingStore::Contains(const std::string& cluster_id) const {
  return matrices_.find(cluster_id) != matrices_.end();
}

const EmbeddingMatrix& EmbeddingStore::For(
    const DocumentCluster& cluster) const {
  auto it = matrices_.find(cluster.cluster_id);
  if (it == matrices_.end()) {
    throw InputError("no embeddings for cluster " + cluster.cluster_id);
  }
  if (it->second.rows() != cluster.size()) {
    throw InputError("cluster " + cluster.cluster_id + ": embedding rows " +
                     std::to_string(it->second.rows()) + " != sentences " +
                     std::to_string(cluster.size()));
  }
  return it->second;
}

EmbeddingMatrix LoadEmbeddings(const std::filesystem::path& path,
                               const DocumentCluster& cluster) {
  return EmbeddingStore::Load(path).For(cluster);
}

double CombinedSimilarity(const TfidfVector& c_i, const TfidfVector& c_j,
                          std::span<const double> r_i,
                          std::span<const double> r_j, double alpha) {
  const double lexical = c_i.Dot(c_j);
  if (r_i.empty() || r_j.empty()) return lexical;
  double semantic = 0.0;
  for (std::size_t d = 0; d < r_i.size(); ++d) semantic += r_i[d] * r_j[d];
  return alpha * lexical + (1.0 - alpha) * semantic;
}

double EdgeThreshold(const SquareMatrix& raw, double theta) {
  const std::size_t n = raw.size();
  if (n < 2) return 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      lo = std::min(lo, raw(i, j));
      hi = std::max(hi, raw(i, j));
    }
  }
  // lerp is exact at both endpoints.
  return std::lerp(lo, hi, theta);
}

SimilarityGraph GraphFromSimilarities(std::string cluster_id, SquareMatrix raw,
                                      double alpha, double theta) {
  CheckUnitInterval(alpha, "alpha");
  CheckUnitInterval(theta, "theta");
  SimilarityGraph graph;
  graph.cluster_id = std::move(cluster_id);
  graph.n = raw.size();
  graph.alpha = alpha;
  graph.theta = theta;
  for (std::size_t i = 0; i < graph.n; ++i) raw(i, i) = 0.0;
  graph.threshold_value = EdgeThreshold(raw, theta);
  graph.edges = SquareMatrix(graph.n);
  for (std::size_t i = 0; i < graph.n; ++i) {
    for (std::size_t j = 0; j < graph.n; ++j) {
      if (i != j) {
        graph.edges(i, j) = std::max(raw(i, j) - graph.threshold_value, 0.0);
      }
    }
  }
  graph.raw = std::move(raw);
  return graph;
}

SimilarityGraph BuildGraph(const DocumentCluster& cluster,
                           const TfidfModel& tfidf,
                           const EmbeddingMatrix* embeddings, double alpha,
                           double theta) {
  CheckUnitInterval(alpha, "alpha");
  const std::size_t n = cluster.size();
  if (tfidf.vectors.size() != n) {
    throw InputError("cluster " + cluster.cluster_id +
                     ": tf-idf vectors do not match sentence count");
  }
  if (embeddings != nullptr && embeddings->rows() != n) {
    throw InputError("cluster " + cluster.cluster_id + ": embedding rows " +
                     std::to_string(embeddings->rows()) + " != sentences " +
                     std::to_string(n));
  }
  double effective_alpha = alpha;
  if (embeddings == nullptr) {
    if (alpha < 1.0) {
      LogWarning("cluster " + cluster.cluster_id +
                 ": no embeddings, using tf-idf similarity only (alpha = 1)");
    }
    effective_alpha = 1.0;
  }

  SquareMatrix raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::span<const double> r_i, r_j;
      if (embeddings != nullptr) {
        r_i = embeddings->Row(i);
        r_j = embeddings->Row(j);
      }
      const double s = CombinedSimilarity(tfidf.vectors[i], tfidf.vectors[j],
                                          r_i, r_j, effective_alpha);
      raw(i, j) = s;
      raw(j, i) = s;
    }
  }
  return GraphFromSimilarities(cluster.cluster_id, std::move(raw),
                               effective_alpha, theta);
}

}  // namespace holisum
