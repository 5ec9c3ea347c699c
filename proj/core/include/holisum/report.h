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

#ifndef HOLISUM_REPORT_H_
#define HOLISUM_REPORT_H_

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "holisum/rouge.h"

namespace holisum {

inline constexpr std::size_t kMaxDiversityN = 4;

struct ClusterEval {
  std::string cluster_id;
  // Empty when the cluster has no references.
  std::map<RougeVariant, RougeScore> rouge;
  // uniq_ngram[k] is the unique (k+1)-gram ratio.
  std::array<double, kMaxDiversityN> uniq_ngram{};
};

struct EvalReport {
  std::vector<ClusterEval> clusters;
  // Means over clusters that have references.
  std::map<RougeVariant, RougeScore> mean_rouge;
  std::size_t clusters_with_references = 0;
  // Means over all clusters.
  std::array<double, kMaxDiversityN> mean_uniq_ngram{};
};

// Scores one summary. `references` may be empty (diversity only).
ClusterEval EvaluateSummary(const std::string& cluster_id,
                            const std::string& summary,
                            std::span<const std::string> references,
                            const RougeScorer& scorer);

// Fills in the corpus means of `report` from its clusters.
void Aggregate(EvalReport& report);

std::string ReportToJson(const EvalReport& report);
// Aligned plain-text table, scores as percentages.
std::string ReportToTable(const EvalReport& report);
// cluster_id,uniq1,uniq2,uniq3,uniq4 plus a trailing "mean" row.
std::string DiversityCsv(const EvalReport& report);

}  // namespace holisum

#endif  // HOLISUM_REPORT_H_
