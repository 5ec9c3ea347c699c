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

#include "holisum/importance.h"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "holisum/error.h"
#include "holisum/log.h"
#include "json.hpp"

namespace holisum {
namespace {

using nlohmann::json;

double ReadScore(const json& value, const std::string& where) {
  double x = 0.0;
  if (value.is_number()) {
    x = value.get<double>();
  } else if (value.is_string()) {
    const std::string s = value.get<std::string>();
    char* end = nullptr;
    x = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
      throw InputError(where + ": expected a number, got \"" + s + "\"");
    }
  } else {
    throw InputError(where + ": expected a number");
  }
  if (!std::isfinite(x)) throw InputError(where + ": non-finite score");
  return x;
}

}  // namespace

ImportanceModel ImportanceModel::FromGraph(
    std::shared_ptr<const SimilarityGraph> graph) {
  ImportanceModel model;
  model.kind_ = ImportanceKind::kGraph;
  model.cluster_id_ = graph->cluster_id;
  model.scores_.assign(graph->n, 0.0);
  for (std::size_t i = 0; i < graph->n; ++i) {
    double degree = 0.0;
    for (std::size_t j = 0; j < graph->n; ++j) {
      if (j != i) degree += graph->edges(i, j);
    }
    model.scores_[i] = degree;
  }
  model.graph_ = std::move(graph);
  return model;
}

ImportanceModel ImportanceModel::FromScores(std::string cluster_id,
                                            std::vector<double> scores) {
  std::size_t negative = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw InputError("cluster " + cluster_id + ": importance score " +
                       std::to_string(i) + " is non-finite");
    }
    if (scores[i] < 0.0) ++negative;
  }
  if (negative > 0) {
    LogWarning("cluster " + cluster_id + ": " + std::to_string(negative) +
               " negative importance score(s)");
  }
  ImportanceModel model;
  model.kind_ = ImportanceKind::kExternal;
  model.cluster_id_ = std::move(cluster_id);
  model.scores_ = std::move(scores);
  return model;
}

double ImportanceModel::SentenceImportance(SentenceId id) const {
  if (id >= scores_.size()) {
    throw std::out_of_range("sentence id " + std::to_string(id) +
                            " out of range for cluster " + cluster_id_ +
                            " of size " + std::to_string(scores_.size()));
  }
  return scores_[id];
}

double ImportanceModel::SubsetImportance(
    std::span<const SentenceId> subset) const {
  if (subset.empty()) return 0.0;
  if (kind_ == ImportanceKind::kExternal) {
    double sum = 0.0;
    for (SentenceId id : subset) sum += SentenceImportance(id);
    return sum;
  }
  const std::size_t n = graph_->n;
  std::vector<char> inside(n, 0);
  for (SentenceId id : subset) {
    if (id >= n) {
      throw std::out_of_range("sentence id " + std::to_string(id) +
                              " out of range for cluster " + cluster_id_);
    }
    inside[id] = 1;
  }
  // Iterate in id order so the value does not depend on subset order.
  double cut = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!inside[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!inside[j]) cut += graph_->edges(i, j);
    }
  }
  return cut / static_cast<double>(n);
}

ImportanceStore ImportanceStore::Parse(std::istream& in) {
  ImportanceStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const std::string where = "importance line " + std::to_string(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError(where + ": malformed JSON (" + e.what() + ")");
    }
    if (!obj.is_object() || !obj.contains("cluster_id") ||
        !obj["cluster_id"].is_string() || !obj.contains("scores") ||
        !obj["scores"].is_array()) {
      throw InputError(where + ": expected {\"cluster_id\", \"scores\"}");
    }
    std::vector<double> scores;
    for (const auto& v : obj["scores"]) scores.push_back(ReadScore(v, where));
    std::string id = obj["cluster_id"].get<std::string>();
    if (!store.scores_.emplace(id, std::move(scores)).second) {
      throw InputError(where + ": duplicate cluster_id " + id);
    }
  }
  return store;
}

ImportanceStore ImportanceStore::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open importance file " + path.string());
  return Parse(in);
}

bool ImportanceStore::Contains(const std::string& cluster_id) const {
  return scores_.find(cluster_id) != scores_.end();
}

ImportanceModel ImportanceStore::For(const DocumentCluster& cluster) const {
  auto it = scores_.find(cluster.cluster_id);
  if (it == scores_.end()) {
    throw InputError("no importance scores for cluster " + cluster.cluster_id);
  }
  if (it->second.size() != cluster.size()) {
    throw InputError("cluster " + cluster.cluster_id + ": importance scores " +
                     std::to_string(it->second.size()) + " != sentences " +
                     std::to_string(cluster.size()));
  }
  return ImportanceModel::FromScores(cluster.cluster_id, it->second);
}

ImportanceModel LoadExternalImportance(const std::filesystem::path& path,
                                       const DocumentCluster& cluster) {
  return ImportanceStore::Load(path).For(cluster);
}

}  // namespace holisum
