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

#include "holisum/corpus.h"

#include <fstream>
#include <string_view>
#include <utility>

#include "holisum/error.h"
#include "holisum/log.h"
#include "holisum/tokenize.h"
#include "json.hpp"

namespace holisum {
namespace {

using nlohmann::json;

std::string LineContext(std::size_t line_no) {
  return "line " + std::to_string(line_no);
}

std::vector<std::string> ReadStringArray(const json& value,
                                         std::string_view field,
                                         std::size_t line_no) {
  if (!value.is_array()) {
    throw InputError(LineContext(line_no) + ": \"" + std::string(field) +
                     "\" must be an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw InputError(LineContext(line_no) + ": \"" + std::string(field) +
                       "\" must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

DocumentCluster ParseClusterObject(const json& obj, std::size_t line_no,
                                   LoadStats* stats) {
  if (!obj.is_object()) {
    throw InputError(LineContext(line_no) + ": expected a JSON object");
  }
  auto id_it = obj.find("id");
  if (id_it == obj.end() || !id_it->is_string()) {
    throw InputError(LineContext(line_no) + ": missing string field \"id\"");
  }
  std::string id = id_it->get<std::string>();

  auto docs_it = obj.find("documents");
  if (docs_it == obj.end() || !docs_it->is_array()) {
    throw InputError(LineContext(line_no) + ": cluster " + id +
                     " is missing the \"documents\" array");
  }
  std::vector<std::vector<std::string>> documents;
  documents.reserve(docs_it->size());
  for (const auto& doc : *docs_it) {
    if (doc.is_string()) {
      documents.push_back(SplitSentences(doc.get<std::string>()));
    } else {
      documents.push_back(ReadStringArray(doc, "documents", line_no));
    }
  }

  std::vector<std::string> references;
  if (auto refs_it = obj.find("references");
      refs_it != obj.end() && !refs_it->is_null()) {
    references = ReadStringArray(*refs_it, "references", line_no);
  }
  return MakeCluster(std::move(id), documents, std::move(references), stats);
}

}  // namespace

DocumentCluster MakeCluster(
    std::string cluster_id,
    const std::vector<std::vector<std::string>>& documents,
    std::vector<std::string> references, LoadStats* stats) {
  DocumentCluster cluster;
  cluster.cluster_id = std::move(cluster_id);
  cluster.references = std::move(references);
  std::size_t dropped = 0;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    std::size_t sent_index = 0;
    for (const auto& raw : documents[d]) {
      std::size_t words = WhitespaceWords(raw).size();
      if (words == 0) {
        ++dropped;
        continue;
      }
      SentenceRecord record;
      record.cluster_id = cluster.cluster_id;
      record.doc_index = d;
      record.sent_index = sent_index++;
      record.global_id = cluster.sentences.size();
      record.text = raw;
      record.tokens = Tokenize(raw);
      record.word_count = words;
      cluster.n_documents = d + 1;
      cluster.sentences.push_back(std::move(record));
    }
  }
  if (stats != nullptr) stats->dropped_sentences += dropped;
  if (cluster.sentences.empty()) {
    throw InputError("cluster " + cluster.cluster_id + " has no sentences");
  }
  if (dropped > 0) {
    LogWarning("cluster " + cluster.cluster_id + ": dropped " +
               std::to_string(dropped) + " empty sentence(s)");
  }
  return cluster;
}

std::vector<DocumentCluster> ParseClusters(std::istream& in,
                                           LoadStats* stats) {
  std::vector<DocumentCluster> clusters;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError(LineContext(line_no) + ": malformed JSON (" +
                       e.what() + ")");
    }
    clusters.push_back(ParseClusterObject(obj, line_no, stats));
  }
  return clusters;
}

std::vector<DocumentCluster> LoadClusters(const std::filesystem::path& path,
                                          ClusterFormat format,
                                          LoadStats* stats) {
  if (format != ClusterFormat::kJsonl) {
    throw InputError("unsupported cluster format");
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open cluster file " + path.string());
  return ParseClusters(in, stats);
}

}  // namespace holisum
