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

#include "holisum/inference.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "holisum/error.h"
#include "holisum/tokenize.h"

namespace holisum {
namespace {

// Completion rule shared by every method.
class BudgetTracker {
 public:
  explicit BudgetTracker(const SelectionProblem& problem)
      : budget_(problem.budget),
        word_counts_(problem.word_counts),
        n_(problem.graph.n) {
    budget_.Validate();
    if (budget_.word_limited() && word_counts_.size() != n_) {
      throw ConfigError("word-limited budget needs one word count per sentence");
    }
  }

  bool Complete(std::size_t members, std::size_t words) const {
    if (members >= n_) return true;
    if (budget_.word_limited()) return words >= budget_.max_words;
    return members >= budget_.n_sentences;
  }

  std::size_t Words(SentenceId id) const {
    return budget_.word_limited() ? word_counts_[id] : 0;
  }

  std::size_t TargetSize() const {
    return std::min(budget_.n_sentences, n_);
  }

  const BudgetSpec& budget() const { return budget_; }

 private:
  BudgetSpec budget_;
  std::span<const std::size_t> word_counts_;
  std::size_t n_;
};

void CheckAligned(const SelectionProblem& problem) {
  if (problem.importance.size() != problem.graph.n) {
    throw InputError("importance model covers " +
                     std::to_string(problem.importance.size()) +
                     " sentences but the graph has " +
                     std::to_string(problem.graph.n));
  }
}

std::vector<SentenceId> InsertSorted(const std::vector<SentenceId>& sorted,
                                     SentenceId id) {
  std::vector<SentenceId> out;
  out.reserve(sorted.size() + 1);
  auto pos = std::lower_bound(sorted.begin(), sorted.end(), id);
  out.insert(out.end(), sorted.begin(), pos);
  out.push_back(id);
  out.insert(out.end(), pos, sorted.end());
  return out;
}

struct Extension {
  SentenceId id;
  double score;
};

// Scores every single-sentence extension of `sorted` and returns them best
// first (higher score, then lower id).
std::vector<Extension> RankExtensions(const SubsetScorer& scorer,
                                      const std::vector<SentenceId>& sorted) {
  std::vector<Extension> out;
  out.reserve(scorer.size() - sorted.size());
  std::vector<SentenceId> grown(sorted.size() + 1);
  for (SentenceId s = 0; s < scorer.size(); ++s) {
    if (std::binary_search(sorted.begin(), sorted.end(), s)) continue;
    auto pos = std::lower_bound(sorted.begin(), sorted.end(), s);
    auto it = std::copy(sorted.begin(), pos, grown.begin());
    *it++ = s;
    std::copy(pos, sorted.end(), it);
    out.push_back({s, scorer.Score(grown)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Extension& a, const Extension& b) {
                     return a.score > b.score;
                   });
  return out;
}

SummarySelection Finish(const SelectionProblem& problem,
                        std::vector<SentenceId> order, Method method,
                        std::vector<TraceStep> trace) {
  SummarySelection out;
  out.cluster_id = problem.graph.cluster_id;
  std::vector<SentenceId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  out.score = SubsetScorer(problem.importance, problem.graph, problem.sri)
                  .Score(sorted);
  out.selected = std::move(order);
  out.method = method;
  out.trace = std::move(trace);
  return out;
}

// Exact search over subsets of `pool` (sorted ids).
SummarySelection EnumerateBest(const SelectionProblem& problem,
                               std::vector<SentenceId> pool, Method method,
                               const SearchOptions& options) {
  CheckAligned(problem);
  BudgetTracker tracker(problem);
  SubsetScorer scorer(problem.importance, problem.graph, problem.sri);
  std::sort(pool.begin(), pool.end());
  const std::size_t p = pool.size();

  std::vector<SentenceId> best;
  double best_score = 0.0;
  bool have_best = false;
  std::size_t scored = 0;
  auto consider = [&](const std::vector<SentenceId>& subset) {
    ++scored;
    const double score = scorer.Score(subset);
    if (!have_best || PrecedesSubset(score, subset, best_score, best)) {
      best = subset;
      best_score = score;
      have_best = true;
    }
  };

  if (!tracker.budget().word_limited()) {
    const std::size_t k = std::min(tracker.TargetSize(), p);
    if (BinomialCapped(p, k, options.max_subsets) > options.max_subsets) {
      throw SearchLimitError(
          "exhaustive search over C(" + std::to_string(p) + ", " +
          std::to_string(k) + ") subsets exceeds the cap of " +
          std::to_string(options.max_subsets) +
          "; use a smaller prefilter size");
    }
    // Lexicographic enumeration of k-combinations of positions in `pool`.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<SentenceId> subset(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
      consider(subset);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == p - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    // Admissible sets are those the add-until-reached rule could produce:
    // they reach the word budget, but would not without their shortest
    // member. A pool too small to reach the budget is taken whole.
    if (p >= 63 || (std::uint64_t{1} << p) - 1 > options.max_subsets) {
      throw SearchLimitError("word-limited exhaustive search over 2^" +
                             std::to_string(p) +
                             " subsets exceeds the cap of " +
                             std::to_string(options.max_subsets) +
                             "; use a smaller prefilter size");
    }
    std::size_t pool_words = 0;
    for (SentenceId id : pool) pool_words += tracker.Words(id);
    if (pool_words < tracker.budget().max_words) {
      consider(pool);
    } else {
      std::vector<SentenceId> subset;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p); ++mask) {
        subset.clear();
        std::size_t words = 0;
        std::size_t shortest = SIZE_MAX;
        for (std::size_t i = 0; i < p; ++i) {
          if (mask & (std::uint64_t{1} << i)) {
            subset.push_back(pool[i]);
            words += tracker.Words(pool[i]);
            shortest = std::min(shortest, tracker.Words(pool[i]));
          }
        }
        if (words >= tracker.budget().max_words &&
            words - shortest < tracker.budget().max_words) {
          consider(subset);
        }
      }
    }
  }

  std::vector<TraceStep> trace;
  if (options.record_trace) trace.push_back({1, scored, 1, best_score});
  return Finish(problem, std::move(best), method, std::move(trace));
}

}  // namespace

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kIndividualGreedy:
      return "individual_greedy";
    case Method::kHolisticGreedy:
      return "holistic_greedy";
    case Method::kBeam:
      return "beam";
    case Method::kExhaustive:
      return "exhaustive";
    case Method::kOracle:
      return "oracle";
  }
  return "unknown";
}

std::optional<Method> ParseMethod(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (Method m : {Method::kIndividualGreedy, Method::kHolisticGreedy,
                   Method::kBeam, Method::kExhaustive, Method::kOracle}) {
    if (MethodName(m) == normalized) return m;
  }
  return std::nullopt;
}

void BudgetSpec::Validate() const {
  if (mode == Mode::kSentenceCount && n_sentences == 0) {
    throw ConfigError("sentence budget must be positive");
  }
  if (mode == Mode::kWordLimit && max_words == 0) {
    throw ConfigError("word limit must be positive");
  }
}

std::vector<std::size_t> WordCounts(const DocumentCluster& cluster) {
  std::vector<std::size_t> counts;
  counts.reserve(cluster.size());
  for (const auto& s : cluster.sentences) counts.push_back(s.word_count);
  return counts;
}

SummarySelection IndividualGreedy(const SelectionProblem& problem,
                                  const SearchOptions& options) {
  CheckAligned(problem);
  BudgetTracker tracker(problem);
  const auto scores = problem.importance.sentence_scores();
  std::vector<SentenceId> ranked(scores.size());
  std::iota(ranked.begin(), ranked.end(), 0);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](SentenceId a, SentenceId b) {
                     return scores[a] > scores[b];
                   });
  std::vector<SentenceId> order;
  std::size_t words = 0;
  for (SentenceId id : ranked) {
    if (tracker.Complete(order.size(), words)) break;
    order.push_back(id);
    words += tracker.Words(id);
  }
  std::vector<TraceStep> trace;
  if (options.record_trace) {
    trace.push_back({1, ranked.size(), order.size(),
                     order.empty() ? 0.0 : scores[order.front()]});
  }
  return Finish(problem, std::move(order), Method::kIndividualGreedy,
                std::move(trace));
}

SummarySelection HolisticGreedy(const SelectionProblem& problem,
                                const SearchOptions& options) {
  CheckAligned(problem);
  BudgetTracker tracker(problem);
  SubsetScorer scorer(problem.importance, problem.graph, problem.sri);
  std::vector<SentenceId> order;
  std::vector<SentenceId> sorted;
  std::vector<TraceStep> trace;
  std::size_t words = 0;
  while (!tracker.Complete(order.size(), words)) {
    auto extensions = RankExtensions(scorer, sorted);
    const Extension& best = extensions.front();
    if (options.record_trace) {
      trace.push_back({order.size() + 1, extensions.size(), 1, best.score});
    }
    order.push_back(best.id);
    sorted = InsertSorted(sorted, best.id);
    words += tracker.Words(best.id);
  }
  return Finish(problem, std::move(order), Method::kHolisticGreedy,
                std::move(trace));
}

SummarySelection HolisticBeam(const SelectionProblem& problem,
                              std::size_t beam_size,
                              const SearchOptions& options) {
  if (beam_size == 0) throw ConfigError("beam size must be positive");
  CheckAligned(problem);
  BudgetTracker tracker(problem);
  SubsetScorer scorer(problem.importance, problem.graph, problem.sri);

  struct Candidate {
    std::vector<SentenceId> sorted;
    std::vector<SentenceId> order;
    double score = 0.0;
    std::size_t words = 0;
  };
  auto precedes = [](const Candidate& a, const Candidate& b) {
    return PrecedesSubset(a.score, a.sorted, b.score, b.sorted);
  };
  auto complete = [&](const Candidate& c) {
    return tracker.Complete(c.sorted.size(), c.words);
  };

  std::vector<Candidate> beam(1);
  std::vector<TraceStep> trace;
  std::size_t step = 0;
  while (!std::all_of(beam.begin(), beam.end(), complete)) {
    ++step;
    std::vector<Candidate> pool;
    std::set<std::vector<SentenceId>> seen;
    std::size_t scored = 0;
    for (const Candidate& member : beam) {
      if (complete(member)) {
        if (seen.insert(member.sorted).second) pool.push_back(member);
        continue;
      }
      auto extensions = RankExtensions(scorer, member.sorted);
      scored += extensions.size();
      const std::size_t take = std::min(beam_size, extensions.size());
      for (std::size_t e = 0; e < take; ++e) {
        Candidate next;
        next.sorted = InsertSorted(member.sorted, extensions[e].id);
        if (!seen.insert(next.sorted).second) continue;
        next.order = member.order;
        next.order.push_back(extensions[e].id);
        next.score = extensions[e].score;
        next.words = member.words + tracker.Words(extensions[e].id);
        pool.push_back(std::move(next));
      }
    }
    std::stable_sort(pool.begin(), pool.end(), precedes);
    if (pool.size() > beam_size) pool.resize(beam_size);
    beam = std::move(pool);
    if (options.record_trace) {
      trace.push_back({step, scored, beam.size(), beam.front().score});
    }
  }
  const Candidate& best = *std::min_element(beam.begin(), beam.end(), precedes);
  return Finish(problem, best.order, Method::kBeam, std::move(trace));
}

SummarySelection HolisticExhaustive(const SelectionProblem& problem,
                                    std::size_t prefilter_size,
                                    const SearchOptions& options) {
  CheckAligned(problem);
  BudgetTracker tracker(problem);
  const std::size_t n = problem.graph.n;
  if (prefilter_size == 0) throw ConfigError("prefilter size must be positive");
  if (!tracker.budget().word_limited() &&
      prefilter_size < tracker.TargetSize()) {
    throw ConfigError("prefilter size " + std::to_string(prefilter_size) +
                      " is smaller than the sentence budget " +
                      std::to_string(tracker.TargetSize()));
  }
  const auto scores = problem.importance.sentence_scores();
  std::vector<SentenceId> ranked(n);
  std::iota(ranked.begin(), ranked.end(), 0);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](SentenceId a, SentenceId b) {
                     return scores[a] > scores[b];
                   });
  ranked.resize(std::min(prefilter_size, n));
  return EnumerateBest(problem, std::move(ranked), Method::kExhaustive,
                       options);
}

SummarySelection OracleExact(const SelectionProblem& problem,
                             const SearchOptions& options) {
  std::vector<SentenceId> all(problem.graph.n);
  std::iota(all.begin(), all.end(), 0);
  return EnumerateBest(problem, std::move(all), Method::kOracle, options);
}

std::string SummaryText(const SummarySelection& selection,
                        const DocumentCluster& cluster,
                        const BudgetSpec& budget) {
  std::string text;
  for (SentenceId id : selection.selected) {
    if (id >= cluster.size()) {
      throw InputError("selected id " + std::to_string(id) +
                       " out of range for cluster " + cluster.cluster_id);
    }
    if (!text.empty()) text.push_back(' ');
    text += cluster.sentences[id].text;
  }
  if (budget.word_limited()) return TruncateWords(text, budget.max_words);
  return text;
}

std::uint64_t BinomialCapped(std::uint64_t n, std::uint64_t k,
                             std::uint64_t cap) {
  const std::uint64_t saturated =
      cap == std::numeric_limits<std::uint64_t>::max() ? cap : cap + 1;
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // c * (n - k + i) is divisible by i; divide first to stay in range.
    const std::uint64_t g = std::gcd(c, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    const std::uint64_t base = c / g;
    if (factor != 0 && base > std::numeric_limits<std::uint64_t>::max() / factor) {
      return saturated;
    }
    c = base * factor;
    if (c > cap) return saturated;
  }
  return c;
}

}  // namespace holisum
