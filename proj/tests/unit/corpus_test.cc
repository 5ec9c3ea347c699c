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

#include <sstream>

#include "gtest/gtest.h"
#include "holisum/error.h"
#include "holisum/log.h"

namespace holisum {
namespace {

std::vector<DocumentCluster> Parse(const std::string& text,
                                   LoadStats* stats = nullptr) {
  std::istringstream in(text);
  return ParseClusters(in, stats);
}

class QuietWarnings : public ::testing::Test {
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

using CorpusTest = QuietWarnings;

TEST_F(CorpusTest, LoadsPresegmentedCluster) {
  auto clusters = Parse(
      R"({"id":"c1","documents":[["A.","B."],["C."]],"references":["A. C."]})"
      "\n");
  ASSERT_EQ(clusters.size(), 1u);
  const auto& c = clusters[0];
  EXPECT_EQ(c.cluster_id, "c1");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.n_documents, 2u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(c.sentences[i].global_id, i);
  const auto& s = c.sentences[2];
  EXPECT_EQ(s.text, "C.");
  EXPECT_EQ(s.doc_index, 1u);
  EXPECT_EQ(s.sent_index, 0u);
  EXPECT_EQ(s.cluster_id, "c1");
  EXPECT_EQ(s.tokens, std::vector<std::string>{"c"});
  EXPECT_EQ(c.references, std::vector<std::string>{"A. C."});
}

TEST_F(CorpusTest, EmptyClusterIsAnError) {
  try {
    Parse(R"({"id":"c2","documents":[[]]})");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("cluster c2 has no sentences"),
              std::string::npos);
  }
}

TEST_F(CorpusTest, MalformedLineNamesLineNumber) {
  try {
    Parse("{\"id\":\"a\",\"documents\":[[\"X.\"]]}\n\n{oops\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos)
        << e.what();
  }
}

TEST_F(CorpusTest, DropsWhitespaceSentencesAndCounts) {
  LoadStats stats;
  auto clusters = Parse(
      R"({"id":"c","documents":[["  ","A b."],[""],["C d.","\t"]]})", &stats);
  const auto& c = clusters[0];
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(stats.dropped_sentences, 3u);
  EXPECT_EQ(c.sentences[0].sent_index, 0u);
  EXPECT_EQ(c.sentences[1].doc_index, 2u);
  EXPECT_EQ(c.n_documents, 3u);
  EXPECT_EQ(warnings_.size(), 1u);
  for (const auto& s : c.sentences) EXPECT_GE(s.word_count, 1u);
}

TEST_F(CorpusTest, KeepsTokenlessSentences) {
  auto clusters = Parse(R"({"id":"c","documents":[["!!!","Word."]]})");
  ASSERT_EQ(clusters[0].size(), 2u);
  EXPECT_TRUE(clusters[0].sentences[0].tokens.empty());
  EXPECT_EQ(clusters[0].sentences[0].word_count, 1u);
}

TEST_F(CorpusTest, RawDocumentsUseSplitter) {
  auto clusters =
      Parse(R"({"id":"r","documents":["Dr. No ran. It rained!","Solo"]})");
  const auto& c = clusters[0];
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.sentences[0].text, "Dr. No ran.");
  EXPECT_EQ(c.sentences[1].text, "It rained!");
  EXPECT_EQ(c.sentences[2].doc_index, 1u);
  EXPECT_TRUE(c.references.empty());
}

TEST_F(CorpusTest, RejectsWrongTypes) {
  EXPECT_THROW(Parse(R"({"documents":[["A."]]})"), InputError);
  EXPECT_THROW(Parse(R"({"id":"x","documents":[[1]]})"), InputError);
  EXPECT_THROW(Parse(R"({"id":"x","documents":[["A."]],"references":"r"})"),
               InputError);
  EXPECT_THROW(Parse(R"([1,2])"), InputError);
}

TEST_F(CorpusTest, DeterministicAndCountsConsistent) {
  const std::string text =
      R"({"id":"a","documents":[["One two.","Three."],["Four five six."]]})"
      "\n"
      R"({"id":"b","documents":["First one. Second one.",["x"]]})"
      "\n";
  auto first = Parse(text);
  auto second = Parse(text);
  ASSERT_EQ(first.size(), 2u);
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].sentences, second[i].sentences);
    std::vector<std::size_t> per_doc(first[i].n_documents, 0);
    for (const auto& s : first[i].sentences) ++per_doc[s.doc_index];
    std::size_t total = 0;
    for (auto n : per_doc) total += n;
    EXPECT_EQ(total, first[i].size());
  }
}

TEST_F(CorpusTest, MissingFile) {
  EXPECT_THROW(LoadClusters("/nonexistent/clusters.jsonl"), InputError);
}

}  // namespace
}  // namespace holisum
