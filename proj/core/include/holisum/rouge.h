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

#ifndef HOLISUM_ROUGE_H_
#define HOLISUM_ROUGE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holisum {

using Tokens = std::vector<std::string>;

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

enum class RougeVariant { kRouge1, kRouge2, kRougeL, kRougeLsum, kRougeSU4 };

// "r1", "r2", "rl", "rlsum", "rsu4".
std::string_view VariantName(RougeVariant variant);
std::optional<RougeVariant> ParseVariant(std::string_view name);

enum class MultiRefPolicy {
  // Scores of the reference with the highest F1 (first one on ties).
  kMax,
  // Arithmetic mean of precision, recall and F1 across references.
  kAverage,
};

// Precision/recall from an overlap count; F1 is their harmonic mean and 0
// when both vanish. Empty sides give all zeros.
RougeScore ScoreFromCounts(double overlap, double candidate_total,
                           double reference_total);

// Clipped n-gram overlap.
RougeScore RougeN(std::span<const std::string> candidate,
                  std::span<const Tokens> references, std::size_t n,
                  MultiRefPolicy policy = MultiRefPolicy::kMax);

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b);

// Sentence-level ROUGE-L: LCS over the full token sequences.
RougeScore RougeL(std::span<const std::string> candidate,
                  std::span<const Tokens> references,
                  MultiRefPolicy policy = MultiRefPolicy::kMax);

// Summary-level ROUGE-L (ROUGE-Lsum): for every reference sentence, the union
// of its LCS with each candidate sentence, with hits clipped by token counts.
RougeScore RougeLsum(std::span<const Tokens> candidate_sentences,
                     std::span<const std::vector<Tokens>> references,
                     MultiRefPolicy policy = MultiRefPolicy::kMax);

// Skip-bigrams with at most `max_skip` intervening tokens, plus unigrams.
RougeScore RougeSU(std::span<const std::string> candidate,
                   std::span<const Tokens> references,
                   std::size_t max_skip = 4,
                   MultiRefPolicy policy = MultiRefPolicy::kMax);

struct RougeConfig {
  std::vector<RougeVariant> variants = {
      RougeVariant::kRouge1, RougeVariant::kRouge2, RougeVariant::kRougeL,
      RougeVariant::kRougeLsum, RougeVariant::kRougeSU4};
  // Porter-stem tokens longer than three characters.
  bool stemming = true;
  // Keep only the first `word_limit` whitespace words of every text.
  std::optional<std::size_t> word_limit;
  MultiRefPolicy multi_ref = MultiRefPolicy::kMax;

  // Throws ConfigError.
  void Validate() const;
};

// Text front end: word limit, tokenization, stemming, then the metrics.
class RougeScorer {
 public:
  explicit RougeScorer(RougeConfig config);

  std::map<RougeVariant, RougeScore> Score(
      std::string_view candidate,
      std::span<const std::string> references) const;

  Tokens Preprocess(std::string_view text) const;
  std::vector<Tokens> PreprocessSentences(std::string_view text) const;

  const RougeConfig& config() const { return config_; }

 private:
  std::string Limit(std::string_view text) const;
  Tokens Normalize(std::string_view text) const;

  RougeConfig config_;
};

}  // namespace holisum

#endif  // HOLISUM_ROUGE_H_
