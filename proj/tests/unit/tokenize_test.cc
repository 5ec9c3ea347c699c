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

#include "holisum/tokenize.h"

#include <random>

#include "gtest/gtest.h"

namespace holisum {
namespace {

using Strings = std::vector<std::string>;

TEST(TokenizeTest, LowercasesAndSplitsOnPunctuation) {
  EXPECT_EQ(Tokenize("The cat's mat."), (Strings{"the", "cat", "s", "mat"}));
  EXPECT_EQ(Tokenize("A-B 42"), (Strings{"a", "b", "42"}));
}

TEST(TokenizeTest, EmptyAndPunctuationOnly) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize("!!! ... --").empty());
}

TEST(TokenizeTest, KeepsMultibyteCharactersInsideTokens) {
  EXPECT_EQ(Tokenize("Café au lait"), (Strings{"café", "au", "lait"}));
}

TEST(TokenizeTest, IdempotentOnJoinedOutput) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "abcXYZ019 .,'-!?\t";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    for (int i = 0; i < 40; ++i) text.push_back(alphabet[pick(rng)]);
    const Strings once = Tokenize(text);
    std::string joined;
    for (const auto& t : once) joined += t + " ";
    EXPECT_EQ(Tokenize(joined), once) << text;
  }
}

TEST(SplitSentencesTest, SplitsOnTerminatorBeforeCapital) {
  EXPECT_EQ(SplitSentences("Hi. Bye."), (Strings{"Hi.", "Bye."}));
  EXPECT_EQ(SplitSentences("Really?! Yes."), (Strings{"Really?!", "Yes."}));
}

TEST(SplitSentencesTest, AbbreviationGuard) {
  EXPECT_EQ(SplitSentences("Dr. Smith left."), (Strings{"Dr. Smith left."}));
  EXPECT_EQ(SplitSentences("He met Mr. Jones in the U.S. He left."),
            (Strings{"He met Mr. Jones in the U.S. He left."}));
}

TEST(SplitSentencesTest, NoTerminator) {
  EXPECT_EQ(SplitSentences("One"), (Strings{"One"}));
  EXPECT_TRUE(SplitSentences("   ").empty());
}

TEST(SplitSentencesTest, LowercaseContinuationDoesNotSplit) {
  EXPECT_EQ(SplitSentences("Version 2.0 is out. it works."),
            (Strings{"Version 2.0 is out. it works."}));
}

TEST(SplitSentencesTest, ClosingQuoteStaysWithSentence) {
  EXPECT_EQ(SplitSentences("She said \"go.\" Then left."),
            (Strings{"She said \"go.\"", "Then left."}));
}

TEST(TruncateWordsTest, KeepsFirstWords) {
  EXPECT_EQ(TruncateWords("a  b\tc d", 3), "a b c");
  EXPECT_EQ(TruncateWords("a b", 5), "a b");
  EXPECT_EQ(WhitespaceWords("  x y  ").size(), 2u);
}

}  // namespace
}  // namespace holisum
