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

#include "holisum/rouge.h"

#include <algorithm>
#include <unordered_map>

#include "holisum/error.h"
#include "holisum/porter_stemmer.h"
#include "holisum/tokenize.h"

namespace holisum {
namespace {

using Counts = std::map<std::vector<std::string>, std::size_t>;

Counts NgramCounts(std::span<const std::string> tokens, std::size_t n) {
  Counts counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i,
                                      tokens.begin() + i + n)];
  }
  return counts;
}

Counts SkipUnitCounts(std::span<const std::string> tokens,
                      std::size_t max_skip) {
  Counts counts;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    ++counts[{tokens[i]}];
    for (std::size_t j = i + 1; j < tokens.size() && j - i - 1 <= max_skip;
         ++j) {
      ++counts[{tokens[i], tokens[j]}];
    }
  }
  return counts;
}

std::size_t Total(const Counts& counts) {
  std::size_t total = 0;
  for (const auto& [_, c] : counts) total += c;
  return total;
}

std::size_t ClippedOverlap(const Counts& candidate, const Counts& reference) {
  std::size_t overlap = 0;
  for (const auto& [gram, c] : candidate) {
    auto it = reference.find(gram);
    if (it != reference.end()) overlap += std::min(c, it->second);
  }
  return overlap;
}

RougeScore Combine(const std::vector<RougeScore>& per_reference,
                   MultiRefPolicy policy) {
  if (per_reference.empty()) return {};
  if (policy == MultiRefPolicy::kMax) {
    const RougeScore* best = &per_reference.front();
    for (const auto& s : per_reference) {
      if (s.f1 > best->f1) best = &s;
    }
    return *best;
  }
  RougeScore mean;
  for (const auto& s : per_reference) {
    mean.precision += s.precision;
    mean.recall += s.recall;
    mean.f1 += s.f1;
  }
  const double k = static_cast<double>(per_reference.size());
  mean.precision /= k;
  mean.recall /= k;
  mean.f1 /= k;
  return mean;
}

using LcsTable = std::vector<std::vector<std::size_t>>;

LcsTable BuildLcsTable(std::span<const std::string> a,
                       std::span<const std::string> b) {
  LcsTable table(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      table[i][j] = a[i - 1] == b[j - 1]
                        ? table[i - 1][j - 1] + 1
                        : std::max(table[i - 1][j], table[i][j - 1]);
    }
  }
  return table;
}

// Indices into `reference` of one LCS with `candidate`.
std::vector<std::size_t> LcsReferenceIndices(
    std::span<const std::string> reference,
    std::span<const std::string> candidate) {
  const LcsTable table = BuildLcsTable(reference, candidate);
  std::vector<std::size_t> indices;
  std::size_t i = reference.size();
  std::size_t j = candidate.size();
  while (i > 0 && j > 0) {
    if (reference[i - 1] == candidate[j - 1]) {
      indices.push_back(i - 1);
      --i;
      --j;
    } else if (table[i][j - 1] > table[i - 1][j]) {
      --j;
    } else {
      --i;
    }
  }
  std::reverse(indices.begin(), indices.end());
  return indices;
}

RougeScore LsumAgainst(std::span<const Tokens> candidate,
                       const std::vector<Tokens>& reference) {
  std::unordered_map<std::string, std::size_t> cand_counts;
  std::unordered_map<std::string, std::size_t> ref_counts;
  std::size_t cand_total = 0;
  std::size_t ref_total = 0;
  for (const auto& s : candidate) {
    cand_total += s.size();
    for (const auto& t : s) ++cand_counts[t];
  }
  for (const auto& s : reference) {
    ref_total += s.size();
    for (const auto& t : s) ++ref_counts[t];
  }
  if (cand_total == 0 || ref_total == 0) return {};

  std::size_t hits = 0;
  for (const auto& ref_sentence : reference) {
    std::vector<std::size_t> united;
    for (const auto& cand_sentence : candidate) {
      auto idx = LcsReferenceIndices(ref_sentence, cand_sentence);
      united.insert(united.end(), idx.begin(), idx.end());
    }
    std::sort(united.begin(), united.end());
    united.erase(std::unique(united.begin(), united.end()), united.end());
    for (std::size_t i : united) {
      const std::string& token = ref_sentence[i];
      auto& c = cand_counts[token];
      auto& r = ref_counts[token];
      if (c > 0 && r > 0) {
        ++hits;
        --c;
        --r;
      }
    }
  }
  return ScoreFromCounts(static_cast<double>(hits),
                         static_cast<double>(cand_total),
                         static_cast<double>(ref_total));
}

}  // namespace

std::string_view VariantName(RougeVariant variant) {
  switch (variant) {
    case RougeVariant::kRouge1:
      return "r1";
    case RougeVariant::kRouge2:
      return "r2";
    case RougeVariant::kRougeL:
      return "rl";
    case RougeVariant::kRougeLsum:
      return "rlsum";
    case RougeVariant::kRougeSU4:
      return "rsu4";
  }
  return "unknown";
}

std::optional<RougeVariant> ParseVariant(std::string_view name) {
  for (RougeVariant v :
       {RougeVariant::kRouge1, RougeVariant::kRouge2, RougeVariant::kRougeL,
        RougeVariant::kRougeLsum, RougeVariant::kRougeSU4}) {
    if (VariantName(v) == name) return v;
  }
  return std::nullopt;
}

RougeScore ScoreFromCounts(double overlap, double candidate_total,
                           double reference_total) {
  if (candidate_total <= 0.0 || reference_total <= 0.0) return {};
  RougeScore s;
  s.precision = overlap / candidate_total;
  s.recall = overlap / reference_total;
  if (s.precision + s.recall > 0.0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

RougeScore RougeN(std::span<const std::string> candidate,
                  std::span<const Tokens> references, std::size_t n,
                  MultiRefPolicy policy) {
  const Counts cand = NgramCounts(candidate, n);
  const double cand_total = static_cast<double>(Total(cand));
  std::vector<RougeScore> per_reference;
  for (const auto& ref : references) {
    const Counts r = NgramCounts(ref, n);
    per_reference.push_back(
        ScoreFromCounts(static_cast<double>(ClippedOverlap(cand, r)),
                        cand_total, static_cast<double>(Total(r))));
  }
  return Combine(per_reference, policy);
}

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeScore RougeL(std::span<const std::string> candidate,
                  std::span<const Tokens> references, MultiRefPolicy policy) {
  std::vector<RougeScore> per_reference;
  for (const auto& ref : references) {
    per_reference.push_back(ScoreFromCounts(
        static_cast<double>(LcsLength(candidate, ref)),
        static_cast<double>(candidate.size()), static_cast<double>(ref.size())));
  }
  return Combine(per_reference, policy);
}

RougeScore RougeLsum(std::span<const Tokens> candidate_sentences,
                     std::span<const std::vector<Tokens>> references,
                     MultiRefPolicy policy) {
  std::vector<RougeScore> per_reference;
  for (const auto& ref : references) {
    per_reference.push_back(LsumAgainst(candidate_sentences, ref));
  }
  return Combine(per_reference, policy);
}

RougeScore RougeSU(std::span<const std::string> candidate,
                   std::span<const Tokens> references, std::size_t max_skip,
                   MultiRefPolicy policy) {
  const Counts cand = SkipUnitCounts(candidate, max_skip);
  const double cand_total = static_cast<double>(Total(cand));
  std::vector<RougeScore> per_reference;
  for (const auto& ref : references) {
    const Counts r = SkipUnitCounts(ref, max_skip);
    per_reference.push_back(
        ScoreFromCounts(static_cast<double>(ClippedOverlap(cand, r)),
                        cand_total, static_cast<double>(Total(r))));
  }
  return Combine(per_reference, policy);
}

void RougeConfig::Validate() const {
  if (variants.empty()) throw ConfigError("at least one ROUGE variant needed");
  if (word_limit && *word_limit == 0) {
    throw ConfigError("ROUGE word limit must be positive");
  }
}

RougeScorer::RougeScorer(RougeConfig config) : config_(std::move(config)) {
  config_.Validate();
}

std::string RougeScorer::Limit(std::string_view text) const {
  if (!config_.word_limit) return std::string(text);
  return TruncateWords(text, *config_.word_limit);
}

Tokens RougeScorer::Normalize(std::string_view text) const {
  Tokens tokens = Tokenize(text);
  if (config_.stemming) {
    for (auto& t : tokens) {
      if (t.size() > 3) t = PorterStem(t);
    }
  }
  return tokens;
}

Tokens RougeScorer::Preprocess(std::string_view text) const {
  return Normalize(Limit(text));
}

std::vector<Tokens> RougeScorer::PreprocessSentences(
    std::string_view text) const {
  std::vector<Tokens> sentences;
  for (const auto& s : SplitSentences(Limit(text))) {
    Tokens tokens = Normalize(s);
    if (!tokens.empty()) sentences.push_back(std::move(tokens));
  }
  return sentences;
}

std::map<RougeVariant, RougeScore> RougeScorer::Score(
    std::string_view candidate,
    std::span<const std::string> references) const {
  const Tokens cand = Preprocess(candidate);
  std::vector<Tokens> refs;
  refs.reserve(references.size());
  for (const auto& r : references) refs.push_back(Preprocess(r));

  std::map<RougeVariant, RougeScore> out;
  for (RougeVariant v : config_.variants) {
    switch (v) {
      case RougeVariant::kRouge1:
        out[v] = RougeN(cand, refs, 1, config_.multi_ref);
        break;
      case RougeVariant::kRouge2:
        out[v] = RougeN(cand, refs, 2, config_.multi_ref);
        break;
      case RougeVariant::kRougeL:
        out[v] = RougeL(cand, refs, config_.multi_ref);
        break;
      case RougeVariant::kRougeLsum: {
        std::vector<std::vector<Tokens>> ref_sentences;
        for (const auto& r : references) {
          ref_sentences.push_back(PreprocessSentences(r));
        }
        out[v] = RougeLsum(PreprocessSentences(candidate), ref_sentences,
                           config_.multi_ref);
        break;
      }
      case RougeVariant::kRougeSU4:
        out[v] = RougeSU(cand, refs, 4, config_.multi_ref);
        break;
    }
  }
  return out;
}

}  // namespace holisum
