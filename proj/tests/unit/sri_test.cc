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

#include "holisum/sri.h"

#include <algorithm>
#include <memory>
#include <random>

#include "gtest/gtest.h"
#include "holisum/error.h"
#include "instances.h"

namespace holisum {
namespace {

SimilarityGraph Graph(std::size_t n,
                      const std::vector<std::tuple<int, int, double>>& edges) {
  SimilarityGraph g;
  g.cluster_id = "g";
  g.n = n;
  g.edges = SquareMatrix(n);
  for (const auto& [i, j, w] : edges) g.edges(i, j) = g.edges(j, i) = w;
  g.raw = g.edges;
  return g;
}

TEST(RedundancyTest, WorkedExamples) {
  const auto pair = Graph(2, {{0, 1, 0.4}});
  const std::vector<SentenceId> both = {0, 1};
  const std::vector<SentenceId> one = {1};
  EXPECT_NEAR(Redundancy(pair, both), 0.8, 1e-15);
  EXPECT_EQ(Redundancy(pair, one), 0.0);
  EXPECT_EQ(Redundancy(pair, {}), 0.0);

  const auto tri = Graph(3, {{0, 1, 0.5}, {0, 2, 0.1}, {1, 2, 0.3}});
  const std::vector<SentenceId> all = {0, 1, 2};
  EXPECT_NEAR(Redundancy(tri, all), 1.3, 1e-15);
}

TEST(SriScoreTest, WorkedExample) {
  // Edges chosen so that I({0,1}) = 0.4 / 3 and R({0,1}) = 0.8.
  auto g = std::make_shared<SimilarityGraph>(
      Graph(3, {{0, 1, 0.4}, {0, 2, 0.4}}));
  auto model = ImportanceModel::FromGraph(g);
  const std::vector<SentenceId> s = {0, 1};
  const SriConfig config{0.0625};
  EXPECT_NEAR(model.SubsetImportance(s), 0.4 / 3.0, 1e-15);
  EXPECT_NEAR(Redundancy(*g, s), 0.8, 1e-15);
  EXPECT_NEAR(SriScore(model, *g, s, config), 0.4 / 3.0 - 0.05, 1e-15);
  EXPECT_EQ(SriScore(model, *g, s, SriConfig{0.0}),
            model.SubsetImportance(s));
  EXPECT_EQ(SriScore(model, *g, {}, config), 0.0);
}

TEST(SriScoreTest, ConfigValidation) {
  EXPECT_NO_THROW(SriConfig{0.0}.Validate());
  EXPECT_THROW(SriConfig{-0.1}.Validate(), ConfigError);
  EXPECT_THROW(SriConfig{std::numeric_limits<double>::quiet_NaN()}.Validate(),
               ConfigError);
  EXPECT_THROW(SriConfig{std::numeric_limits<double>::infinity()}.Validate(),
               ConfigError);
}

TEST(SriScoreTest, LinearInLambdaAndMatchesScorer) {
  std::mt19937_64 rng(31);
  std::bernoulli_distribution coin(0.4);
  std::uniform_real_distribution<double> lam(0.0, 3.0);
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = testing::MakeRandomInstance(rng);
    std::vector<SentenceId> subset;
    for (SentenceId i = 0; i < inst.graph->n; ++i) {
      if (coin(rng)) subset.push_back(i);
    }
    const double l = lam(rng);
    const double imp = inst.importance.SubsetImportance(subset);
    const double red = Redundancy(*inst.graph, subset);
    const double score =
        SriScore(inst.importance, *inst.graph, subset, SriConfig{l});
    EXPECT_NEAR(score, imp - l * red, 1e-12);
    SubsetScorer scorer(inst.importance, *inst.graph, SriConfig{l});
    EXPECT_NEAR(scorer.Score(subset), score, 1e-12);
    EXPECT_NEAR(scorer.Importance(subset), imp, 1e-12);
    EXPECT_NEAR(scorer.Redundancy(subset), red, 1e-12);
  }
}

TEST(RedundancyTest, MonotoneUnderAdditionAndEdgeIncrease) {
  std::mt19937_64 rng(37);
  std::bernoulli_distribution coin(0.4);
  std::uniform_real_distribution<double> bump(0.0, 0.5);
  for (int trial = 0; trial < 500; ++trial) {
    auto inst = testing::MakeRandomInstance(rng);
    const std::size_t n = inst.graph->n;
    std::vector<SentenceId> subset;
    std::vector<SentenceId> rest;
    for (SentenceId i = 0; i < n; ++i) {
      (coin(rng) ? subset : rest).push_back(i);
    }
    const double before = Redundancy(*inst.graph, subset);
    EXPECT_GE(before, 0.0);
    for (SentenceId extra : rest) {
      auto bigger = subset;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), extra),
                    extra);
      EXPECT_GE(Redundancy(*inst.graph, bigger), before);
    }
    if (subset.size() >= 2) {
      SimilarityGraph raised = *inst.graph;
      const SentenceId a = subset[0];
      const SentenceId b = subset[1];
      raised.edges(a, b) = raised.edges(b, a) = raised.edges(a, b) + bump(rng);
      EXPECT_GE(Redundancy(raised, subset), before);
    }
  }
}

TEST(RedundancyTest, IdenticalSentencesAreMaximallyRedundant) {
  auto cluster = MakeCluster(
      "c", {{"The river floods every spring.", "Markets opened higher today.",
             "The river floods every spring.", "Rain is expected tonight."}},
      {});
  auto tfidf = BuildTfidf(cluster);
  for (double theta : {0.0, 0.1, 0.5}) {
    auto g = BuildGraph(cluster, tfidf, nullptr, 1.0, theta);
    EXPECT_NEAR(g.raw(0, 2), 1.0, 1e-12);
    double max_edge = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
      for (std::size_t j = 0; j < g.n; ++j) {
        max_edge = std::max(max_edge, g.edges(i, j));
      }
    }
    EXPECT_NEAR(g.edges(0, 2), max_edge, 1e-12);
    const std::vector<SentenceId> s = {0, 1, 2};
    EXPECT_GE(Redundancy(g, s), 2.0 * (1.0 - g.threshold_value) - 1e-12);
  }
}

TEST(PrecedesSubsetTest, ScoreThenLexicographic) {
  const std::vector<SentenceId> a = {0, 3};
  const std::vector<SentenceId> b = {1, 2};
  EXPECT_TRUE(PrecedesSubset(0.5, b, 0.4, a));
  EXPECT_TRUE(PrecedesSubset(0.5, a, 0.5, b));
  EXPECT_FALSE(PrecedesSubset(0.5, b, 0.5, a));
  EXPECT_FALSE(PrecedesSubset(0.5, a, 0.5, a));
}

}  // namespace
}  // namespace holisum
