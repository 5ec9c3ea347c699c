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

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"
#include "holisum/error.h"
#include "holisum/log.h"
#include "instances.h"

namespace holisum {
namespace {

std::shared_ptr<const SimilarityGraph> ThreeNodeGraph() {
  auto g = std::make_shared<SimilarityGraph>();
  g->cluster_id = "g";
  g->n = 3;
  g->raw = SquareMatrix(3);
  g->edges = SquareMatrix(3);
  g->edges(0, 1) = g->edges(1, 0) = 0.2;
  g->edges(0, 2) = g->edges(2, 0) = 0.4;
  g->raw = g->edges;
  return g;
}

TEST(ImportanceTest, DegreeCentrality) {
  auto model = ImportanceModel::FromGraph(ThreeNodeGraph());
  EXPECT_EQ(model.kind(), ImportanceKind::kGraph);
  EXPECT_NEAR(model.SentenceImportance(0), 0.6, 1e-15);
  EXPECT_NEAR(model.SentenceImportance(1), 0.2, 1e-15);
  EXPECT_NEAR(model.SentenceImportance(2), 0.4, 1e-15);
  EXPECT_THROW(model.SentenceImportance(3), std::out_of_range);
}

TEST(ImportanceTest, IsolatedNodeHasZeroImportance) {
  auto g = std::make_shared<SimilarityGraph>();
  g->n = 2;
  g->raw = g->edges = SquareMatrix(2);
  auto model = ImportanceModel::FromGraph(g);
  EXPECT_EQ(model.SentenceImportance(0), 0.0);
  EXPECT_EQ(model.SentenceImportance(1), 0.0);
}

TEST(ImportanceTest, SubsetCutImportance) {
  auto model = ImportanceModel::FromGraph(ThreeNodeGraph());
  const std::vector<SentenceId> s0 = {0};
  const std::vector<SentenceId> s01 = {0, 1};
  const std::vector<SentenceId> s10 = {1, 0};
  const std::vector<SentenceId> all = {0, 1, 2};
  EXPECT_NEAR(model.SubsetImportance(s0), 0.2, 1e-15);
  EXPECT_NEAR(model.SubsetImportance(s01), 0.4 / 3.0, 1e-15);
  EXPECT_EQ(model.SubsetImportance(s01), model.SubsetImportance(s10));
  EXPECT_EQ(model.SubsetImportance(all), 0.0);
  EXPECT_EQ(model.SubsetImportance({}), 0.0);
}

class ExternalImportanceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    previous_ = SetWarningSink([this](std::string_view m) {
      warnings_.emplace_back(m);
    });
  }
  void TearDown() override { SetWarningSink(previous_); }

  std::vector<std::string> warnings_;

 private:
  WarningSink previous_;
};

TEST_F(ExternalImportanceTest, LookupAndSum) {
  auto model = ImportanceModel::FromScores("c", {0.1, 0.7, 0.2});
  EXPECT_EQ(model.kind(), ImportanceKind::kExternal);
  EXPECT_EQ(model.graph(), nullptr);
  EXPECT_EQ(model.SentenceImportance(1), 0.7);
  const std::vector<SentenceId> s = {0, 2};
  EXPECT_NEAR(model.SubsetImportance(s), 0.3, 1e-15);
  EXPECT_TRUE(warnings_.empty());
}

TEST_F(ExternalImportanceTest, NegativeScoresWarn) {
  auto model = ImportanceModel::FromScores("c", {0.1, -0.5});
  EXPECT_EQ(model.SentenceImportance(1), -0.5);
  ASSERT_EQ(warnings_.size(), 1u);
  EXPECT_NE(warnings_[0].find("negative"), std::string::npos);
}

TEST_F(ExternalImportanceTest, StoreLoadsAlignedScores) {
  std::istringstream in(R"({"cluster_id":"c1","scores":[0.5,0.3,0.2]})");
  auto store = ImportanceStore::Parse(in);
  auto cluster = MakeCluster("c1", {{"A.", "B.", "C."}}, {});
  auto model = store.For(cluster);
  EXPECT_EQ(model.size(), 3u);
  EXPECT_EQ(model.SentenceImportance(0), 0.5);
  EXPECT_EQ(model.SentenceImportance(2), 0.2);
}

TEST_F(ExternalImportanceTest, StoreRejectsMismatchAndNonFinite) {
  auto cluster = MakeCluster("c1", {{"A.", "B.", "C."}}, {});
  {
    std::istringstream in(R"({"cluster_id":"c1","scores":[0.5,0.3]})");
    auto store = ImportanceStore::Parse(in);
    EXPECT_THROW(store.For(cluster), InputError);
  }
  {
    std::istringstream in(R"({"cluster_id":"c1","scores":[0.5,"NaN",0.2]})");
    EXPECT_THROW(ImportanceStore::Parse(in), InputError);
  }
  {
    std::istringstream in(R"({"cluster_id":"other","scores":[1,2,3]})");
    auto store = ImportanceStore::Parse(in);
    EXPECT_FALSE(store.Contains("c1"));
    EXPECT_THROW(store.For(cluster), InputError);
  }
  EXPECT_THROW(ImportanceModel::FromScores(
                   "c", {1.0, std::numeric_limits<double>::infinity()}),
               InputError);
}

TEST_F(ExternalImportanceTest, AdditiveOverDisjointSubsets) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> scores(10);
    for (double& s : scores) s = u(rng);
    auto model = ImportanceModel::FromScores("c", scores);
    std::vector<SentenceId> a, b, ab;
    for (SentenceId i = 0; i < 10; ++i) {
      const double r = u(rng);
      if (r < 0.33) {
        a.push_back(i);
        ab.push_back(i);
      } else if (r < 0.66) {
        b.push_back(i);
        ab.push_back(i);
      }
    }
    EXPECT_NEAR(model.SubsetImportance(ab),
                model.SubsetImportance(a) + model.SubsetImportance(b), 1e-12);
  }
}

TEST(ImportancePropertyTest, HandshakeAndDegreeIdentities) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> theta_dist(0.0, 0.6);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 14;
    auto graph = std::make_shared<SimilarityGraph>(GraphFromSimilarities(
        "g", testing::RandomSimilarities(rng, n), 1.0, theta_dist(rng)));
    auto model = ImportanceModel::FromGraph(graph);
    double degree_sum = 0.0;
    double edge_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      degree_sum += model.SentenceImportance(i);
      for (std::size_t j = i + 1; j < n; ++j) edge_sum += graph->edges(i, j);
    }
    EXPECT_NEAR(degree_sum, 2.0 * edge_sum, 1e-9);

    std::vector<SentenceId> subset;
    for (SentenceId i = 0; i < n; ++i) {
      if (coin(rng)) subset.push_back(i);
    }
    double member_degrees = 0.0;
    double internal = 0.0;
    for (std::size_t a = 0; a < subset.size(); ++a) {
      member_degrees += model.SentenceImportance(subset[a]);
      for (std::size_t b = a + 1; b < subset.size(); ++b) {
        internal += graph->edges(subset[a], subset[b]);
      }
    }
    EXPECT_NEAR(member_degrees,
                static_cast<double>(n) * model.SubsetImportance(subset) +
                    2.0 * internal,
                1e-9);
    EXPECT_NEAR(model.SubsetImportance(subset),
                testing::CutImportance(*graph, subset), 1e-12);

    auto shuffled = subset;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(model.SubsetImportance(shuffled),
              model.SubsetImportance(subset));
  }
}

}  // namespace
}  // namespace holisum
