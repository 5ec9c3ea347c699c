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

#include "gtest/gtest.h"
#include "json.hpp"

namespace holisum {
namespace {

RougeScorer Scorer() {
  RougeConfig config;
  config.variants = {RougeVariant::kRouge1, RougeVariant::kRouge2};
  config.stemming = false;
  return RougeScorer(config);
}

TEST(ReportTest, EvaluateSummaryWithAndWithoutReferences) {
  const auto scorer = Scorer();
  const std::vector<std::string> refs = {"the cat"};
  const auto with = EvaluateSummary("c1", "the cat sat", refs, scorer);
  ASSERT_EQ(with.rouge.size(), 2u);
  EXPECT_NEAR(with.rouge.at(RougeVariant::kRouge1).f1, 0.8, 1e-15);
  EXPECT_DOUBLE_EQ(with.uniq_ngram[0], 1.0);

  const auto without = EvaluateSummary("c2", "a b a b", {}, scorer);
  EXPECT_TRUE(without.rouge.empty());
  EXPECT_DOUBLE_EQ(without.uniq_ngram[0], 0.5);
  EXPECT_DOUBLE_EQ(without.uniq_ngram[1], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(without.uniq_ngram[2], 1.0);
  EXPECT_DOUBLE_EQ(without.uniq_ngram[3], 1.0);
}

TEST(ReportTest, AggregateMeansOverClusters) {
  const auto scorer = Scorer();
  EvalReport report;
  const std::vector<std::string> r1 = {"the cat"};
  const std::vector<std::string> r2 = {"a dog ran"};
  report.clusters.push_back(EvaluateSummary("c1", "the cat sat", r1, scorer));
  report.clusters.push_back(EvaluateSummary("c2", "a dog ran", r2, scorer));
  report.clusters.push_back(EvaluateSummary("c3", "x x", {}, scorer));
  Aggregate(report);
  EXPECT_EQ(report.clusters_with_references, 2u);
  EXPECT_NEAR(report.mean_rouge.at(RougeVariant::kRouge1).f1, 0.9, 1e-15);
  EXPECT_NEAR(report.mean_rouge.at(RougeVariant::kRouge1).precision,
              (2.0 / 3.0 + 1.0) / 2.0, 1e-15);
  EXPECT_NEAR(report.mean_uniq_ngram[0], (1.0 + 1.0 + 0.5) / 3.0, 1e-15);
}

TEST(ReportTest, JsonTableAndCsvShapes) {
  const auto scorer = Scorer();
  EvalReport report;
  const std::vector<std::string> refs = {"the cat"};
  report.clusters.push_back(EvaluateSummary("c1", "the cat sat", refs, scorer));
  report.clusters.push_back(EvaluateSummary("c2", "x y", {}, scorer));
  Aggregate(report);

  const auto json = nlohmann::json::parse(ReportToJson(report));
  ASSERT_EQ(json["clusters"].size(), 2u);
  EXPECT_TRUE(json["clusters"][0].contains("rouge"));
  EXPECT_FALSE(json["clusters"][1].contains("rouge"));
  EXPECT_TRUE(json["clusters"][1].contains("uniq_ngram_ratio"));
  EXPECT_NEAR(json["mean"]["rouge"]["r1"]["f1"].get<double>(), 0.8, 1e-15);
  EXPECT_EQ(json["clusters_with_references"].get<int>(), 1);

  const std::string table = ReportToTable(report);
  EXPECT_NE(table.find("r1-F1"), std::string::npos);
  EXPECT_NE(table.find("80.00"), std::string::npos);
  EXPECT_NE(table.find("MEAN"), std::string::npos);

  const std::string csv = DiversityCsv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "cluster_id,uniq1,uniq2,uniq3,uniq4");
  EXPECT_NE(csv.find("c2,1.0000,1.0000,1.0000,1.0000"), std::string::npos);
  EXPECT_NE(csv.find("\nmean,"), std::string::npos);
}

}  // namespace
}  // namespace holisum
