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

#include "holisum/pipeline.h"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "holisum/error.h"
#include "holisum/log.h"
#include "json.hpp"

namespace holisum {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Re-throws the active exception with `context` prepended, keeping the
// error category.
[[noreturn]] void RethrowWithContext(const std::string& context) {
  try {
    throw;
  } catch (const SearchLimitError& e) {
    throw SearchLimitError(context + ": " + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(context + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(context + ": " + e.what());
  } catch (const std::exception& e) {
    throw InputError(context + ": " + e.what());
  }
}

std::string CsvNumber(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::string CsvParam(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

}  // namespace

ClusterFeatures BuildFeatures(const DocumentCluster& cluster, double alpha,
                              double theta, const SideInputs& side) {
  const TfidfModel tfidf = BuildTfidf(cluster);
  const EmbeddingMatrix* embeddings = nullptr;
  if (side.embeddings != nullptr) {
    if (side.embeddings->Contains(cluster.cluster_id)) {
      embeddings = &side.embeddings->For(cluster);
    } else {
      LogWarning("no embeddings for cluster " + cluster.cluster_id +
                 ", using tf-idf similarity only");
    }
  }
  auto graph = std::make_shared<const SimilarityGraph>(
      BuildGraph(cluster, tfidf, embeddings, alpha, theta));
  ImportanceModel importance =
      side.importance != nullptr ? side.importance->For(cluster)
                                 : ImportanceModel::FromGraph(graph);
  return {std::move(graph), std::move(importance), WordCounts(cluster)};
}

SummarySelection Select(const ClusterFeatures& features,
                        const RunConfig& config) {
  const SelectionProblem problem{features.importance, *features.graph,
                                 SriConfig{config.lambda}, config.budget,
                                 features.word_counts};
  SearchOptions options;
  options.max_subsets = config.max_subsets;
  switch (config.method) {
    case Method::kIndividualGreedy:
      return IndividualGreedy(problem, options);
    case Method::kHolisticGreedy:
      return HolisticGreedy(problem, options);
    case Method::kBeam:
      return HolisticBeam(problem, config.beam_size, options);
    case Method::kExhaustive:
      return HolisticExhaustive(problem, config.prefilter_size, options);
    case Method::kOracle:
      return OracleExact(problem, options);
  }
  throw ConfigError("unknown method");
}

ClusterResult SummarizeCluster(const DocumentCluster& cluster,
                               const RunConfig& config,
                               const SideInputs& side) {
  try {
    const auto start = Clock::now();
    ClusterFeatures features =
        BuildFeatures(cluster, config.alpha, config.theta, side);
    ClusterResult result;
    result.selection = Select(features, config);
    result.summary_text =
        SummaryText(result.selection, cluster, config.budget);
    result.elapsed_ms = MillisSince(start);
    return result;
  } catch (...) {
    RethrowWithContext("cluster " + cluster.cluster_id);
  }
}

SummarizeOutcome SummarizeAll(const std::vector<DocumentCluster>& clusters,
                              const RunConfig& config,
                              const SideInputs& side) {
  config.Validate();
  const std::size_t n = clusters.size();
  SummarizeOutcome outcome;
  outcome.results.resize(n);
  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        outcome.results[i] = SummarizeCluster(clusters[i], config, side);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(config.jobs, std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!failures[i]) continue;
    if (!config.skip_errors) std::rethrow_exception(failures[i]);
    try {
      std::rethrow_exception(failures[i]);
    } catch (const std::exception& e) {
      outcome.errors.push_back(e.what());
      LogWarning(std::string("skipping: ") + e.what());
    }
  }
  return outcome;
}

std::string SelectionJsonLine(const ClusterResult& result, bool with_timing) {
  ordered_json line;
  line["id"] = result.selection.cluster_id;
  line["selected_ids"] = result.selection.selected;
  line["summary_text"] = result.summary_text;
  line["sri_score"] = result.selection.score;
  line["method"] = std::string(MethodName(result.selection.method));
  if (with_timing) line["elapsed_ms"] = result.elapsed_ms;
  return line.dump();
}

std::size_t RunSummarize(const RunConfig& config, std::ostream& out) {
  config.Validate();
  const auto clusters = LoadClusters(config.clusters);
  std::optional<EmbeddingStore> embeddings;
  std::optional<ImportanceStore> importance;
  SideInputs side;
  if (!config.embeddings.empty()) {
    embeddings = EmbeddingStore::Load(config.embeddings);
    side.embeddings = &*embeddings;
  }
  if (!config.importance.empty()) {
    importance = ImportanceStore::Load(config.importance);
    side.importance = &*importance;
  }
  const SummarizeOutcome outcome = SummarizeAll(clusters, config, side);
  for (const auto& result : outcome.results) {
    if (result) out << SelectionJsonLine(*result, config.timing) << '\n';
  }
  return outcome.errors.size();
}

std::vector<SelectionRecord> ParseSelections(std::istream& in) {
  std::vector<SelectionRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const std::string where = "selections line " + std::to_string(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError(where + ": malformed JSON (" + e.what() + ")");
    }
    try {
      SelectionRecord r;
      r.id = obj.at("id").get<std::string>();
      r.summary_text = obj.at("summary_text").get<std::string>();
      if (auto it = obj.find("selected_ids"); it != obj.end()) {
        r.selected_ids = it->get<std::vector<SentenceId>>();
      }
      records.push_back(std::move(r));
    } catch (const json::exception&) {
      throw InputError(where +
                       ": expected string \"id\" and \"summary_text\" fields");
    }
  }
  return records;
}

EvalReport EvaluateSelections(const std::vector<SelectionRecord>& selections,
                              const std::vector<DocumentCluster>& clusters,
                              const RougeScorer& scorer) {
  std::map<std::string, const DocumentCluster*> by_id;
  for (const auto& c : clusters) by_id.emplace(c.cluster_id, &c);

  std::vector<std::string> orphans;
  for (const auto& s : selections) {
    if (by_id.find(s.id) == by_id.end()) orphans.push_back(s.id);
  }
  if (!orphans.empty()) {
    std::string list;
    for (const auto& id : orphans) list += (list.empty() ? "" : ", ") + id;
    throw InputError("selections without a matching cluster: " + list);
  }

  EvalReport report;
  std::set<std::string> seen;
  for (const auto& s : selections) {
    const DocumentCluster& cluster = *by_id.at(s.id);
    if (cluster.references.empty()) {
      LogWarning("cluster " + s.id + " has no references; diversity only");
    }
    report.clusters.push_back(
        EvaluateSummary(s.id, s.summary_text, cluster.references, scorer));
    seen.insert(s.id);
  }
  for (const auto& c : clusters) {
    if (!seen.count(c.cluster_id)) {
      LogWarning("cluster " + c.cluster_id + " has no selection");
    }
  }
  Aggregate(report);
  return report;
}

std::vector<SweepRow> RunSweep(const std::vector<DocumentCluster>& clusters,
                               const RunConfig& base, const SweepGrid& grid,
                               const SideInputs& side,
                               const RougeScorer& scorer) {
  bool any_references = false;
  for (const auto& c : clusters) any_references |= !c.references.empty();
  if (!any_references) {
    throw InputError("sweep needs clusters with reference summaries");
  }
  auto or_base = []<typename T>(const std::vector<T>& axis, T fallback) {
    return axis.empty() ? std::vector<T>{fallback} : axis;
  };
  const auto alphas = or_base(grid.alphas, base.alpha);
  const auto thetas = or_base(grid.thetas, base.theta);
  const auto lambdas = or_base(grid.lambdas, base.lambda);
  const auto beams = or_base(grid.beam_sizes, base.beam_size);
  const auto methods = or_base(grid.methods, base.method);

  std::vector<SweepRow> rows;
  for (double alpha : alphas) {
    for (double theta : thetas) {
      std::vector<ClusterFeatures> features;
      features.reserve(clusters.size());
      for (const auto& c : clusters) {
        try {
          features.push_back(BuildFeatures(c, alpha, theta, side));
        } catch (...) {
          RethrowWithContext("cluster " + c.cluster_id);
        }
      }
      for (Method method : methods) {
        for (double lambda : lambdas) {
          const bool beam = method == Method::kBeam;
          const std::vector<std::size_t> beam_axis =
              beam ? beams : std::vector<std::size_t>{base.beam_size};
          for (std::size_t beam_size : beam_axis) {
            RunConfig config = base;
            config.method = method;
            config.alpha = alpha;
            config.theta = theta;
            config.lambda = lambda;
            config.beam_size = beam_size;
            config.Validate();

            SweepRow row;
            row.method = method;
            row.alpha = alpha;
            row.theta = theta;
            row.lambda = lambda;
            if (beam) row.beam_size = beam_size;

            EvalReport report;
            for (std::size_t i = 0; i < clusters.size(); ++i) {
              const auto start = Clock::now();
              SummarySelection selection;
              try {
                selection = Select(features[i], config);
              } catch (...) {
                RethrowWithContext("cluster " + clusters[i].cluster_id);
              }
              row.inference_ms += MillisSince(start);
              const std::string text =
                  SummaryText(selection, clusters[i], config.budget);
              report.clusters.push_back(EvaluateSummary(
                  clusters[i].cluster_id, text, clusters[i].references,
                  scorer));
            }
            Aggregate(report);
            row.mean_rouge = report.mean_rouge;
            row.mean_uniq_ngram = report.mean_uniq_ngram;
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows,
                     const RougeConfig& rouge, bool with_runtime) {
  std::ostringstream out;
  out << "method,alpha,theta,lambda,beam_size";
  for (RougeVariant v : rouge.variants) out << ',' << VariantName(v) << "_f1";
  for (std::size_t k = 1; k <= kMaxDiversityN; ++k) out << ",uniq" << k;
  if (with_runtime) out << ",inference_ms";
  out << '\n';
  for (const auto& row : rows) {
    out << MethodName(row.method) << ',' << CsvParam(row.alpha) << ','
        << CsvParam(row.theta) << ',' << CsvParam(row.lambda) << ',';
    if (row.beam_size) out << *row.beam_size;
    for (RougeVariant v : rouge.variants) {
      auto it = row.mean_rouge.find(v);
      out << ',' << (it == row.mean_rouge.end() ? "" : CsvNumber(it->second.f1));
    }
    for (double u : row.mean_uniq_ngram) out << ',' << CsvNumber(u);
    if (with_runtime) out << ',' << CsvNumber(row.inference_ms);
    out << '\n';
  }
  return out.str();
}

}  // namespace holisum
