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

#include "holisum/report.h"

#include <cstdio>
#include <sstream>

#include "holisum/diversity.h"
#include "holisum/tokenize.h"
#include "json.hpp"

namespace holisum {
namespace {

using nlohmann::ordered_json;

ordered_json RougeJson(const std::map<RougeVariant, RougeScore>& scores) {
  ordered_json out = ordered_json::object();
  for (const auto& [variant, s] : scores) {
    out[std::string(VariantName(variant))] = {
        {"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
  }
  return out;
}

ordered_json UniqJson(const std::array<double, kMaxDiversityN>& ratios) {
  ordered_json out = ordered_json::object();
  for (std::size_t k = 0; k < kMaxDiversityN; ++k) {
    out[std::to_string(k + 1)] = ratios[k];
  }
  return out;
}

std::string Percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * x);
  return buf;
}

std::string Fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

}  // namespace

ClusterEval EvaluateSummary(const std::string& cluster_id,
                            const std::string& summary,
                            std::span<const std::string> references,
                            const RougeScorer& scorer) {
  ClusterEval eval;
  eval.cluster_id = cluster_id;
  if (!references.empty()) eval.rouge = scorer.Score(summary, references);
  const Tokens tokens = Tokenize(summary);
  for (std::size_t k = 0; k < kMaxDiversityN; ++k) {
    eval.uniq_ngram[k] = UniqueNgramRatio(tokens, k + 1);
  }
  return eval;
}

void Aggregate(EvalReport& report) {
  report.mean_rouge.clear();
  report.clusters_with_references = 0;
  report.mean_uniq_ngram.fill(0.0);
  for (const auto& c : report.clusters) {
    for (std::size_t k = 0; k < kMaxDiversityN; ++k) {
      report.mean_uniq_ngram[k] += c.uniq_ngram[k];
    }
    if (c.rouge.empty()) continue;
    ++report.clusters_with_references;
    for (const auto& [variant, s] : c.rouge) {
      auto& m = report.mean_rouge[variant];
      m.precision += s.precision;
      m.recall += s.recall;
      m.f1 += s.f1;
    }
  }
  if (!report.clusters.empty()) {
    for (auto& v : report.mean_uniq_ngram) {
      v /= static_cast<double>(report.clusters.size());
    }
  }
  if (report.clusters_with_references > 0) {
    const double k = static_cast<double>(report.clusters_with_references);
    for (auto& [_, m] : report.mean_rouge) {
      m.precision /= k;
      m.recall /= k;
      m.f1 /= k;
    }
  }
}

std::string ReportToJson(const EvalReport& report) {
  ordered_json clusters = ordered_json::array();
  for (const auto& c : report.clusters) {
    ordered_json entry;
    entry["id"] = c.cluster_id;
    if (!c.rouge.empty()) entry["rouge"] = RougeJson(c.rouge);
    entry["uniq_ngram_ratio"] = UniqJson(c.uniq_ngram);
    clusters.push_back(std::move(entry));
  }
  ordered_json mean;
  if (!report.mean_rouge.empty()) mean["rouge"] = RougeJson(report.mean_rouge);
  mean["uniq_ngram_ratio"] = UniqJson(report.mean_uniq_ngram);
  ordered_json out;
  out["clusters"] = std::move(clusters);
  out["clusters_with_references"] = report.clusters_with_references;
  out["mean"] = std::move(mean);
  return out.dump(2) + "\n";
}

std::string ReportToTable(const EvalReport& report) {
  std::vector<std::string> header = {"cluster"};
  std::vector<RougeVariant> variants;
  for (const auto& [v, _] : report.mean_rouge) {
    variants.push_back(v);
    header.push_back(std::string(VariantName(v)) + "-F1");
  }
  for (std::size_t k = 1; k <= kMaxDiversityN; ++k) {
    header.push_back("uniq" + std::to_string(k));
  }

  std::vector<std::vector<std::string>> rows;
  auto add_row = [&](const std::string& id,
                     const std::map<RougeVariant, RougeScore>& rouge,
                     const std::array<double, kMaxDiversityN>& uniq) {
    std::vector<std::string> row = {id};
    for (RougeVariant v : variants) {
      auto it = rouge.find(v);
      row.push_back(it == rouge.end() ? "-" : Percent(it->second.f1));
    }
    for (double u : uniq) row.push_back(Fixed(u));
    rows.push_back(std::move(row));
  };
  for (const auto& c : report.clusters) {
    add_row(c.cluster_id, c.rouge, c.uniq_ngram);
  }
  add_row("MEAN", report.mean_rouge, report.mean_uniq_ngram);

  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i == 0) {
        out << row[i] << std::string(width[i] - row[i].size(), ' ');
      } else {
        out << "  " << std::string(width[i] - row[i].size(), ' ') << row[i];
      }
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

std::string DiversityCsv(const EvalReport& report) {
  std::ostringstream out;
  out << "cluster_id";
  for (std::size_t k = 1; k <= kMaxDiversityN; ++k) out << ",uniq" << k;
  out << '\n';
  auto row = [&](const std::string& id,
                 const std::array<double, kMaxDiversityN>& uniq) {
    out << id;
    for (double u : uniq) out << ',' << Fixed(u);
    out << '\n';
  };
  for (const auto& c : report.clusters) row(c.cluster_id, c.uniq_ngram);
  row("mean", report.mean_uniq_ngram);
  return out.str();
}

}  // namespace holisum
