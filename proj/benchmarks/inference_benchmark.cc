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

// Inference cost per method on random clusters, for comparing search quality
// against running time.

#include <memory>
#include <random>

#include "benchmark/benchmark.h"
#include "holisum/importance.h"
#include "holisum/inference.h"
#include "holisum/similarity.h"

namespace holisum {
namespace {

struct Instance {
  std::shared_ptr<const SimilarityGraph> graph;
  ImportanceModel importance;
};

Instance MakeInstance(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SquareMatrix raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) raw(i, j) = raw(j, i) = u(rng);
  }
  auto graph = std::make_shared<const SimilarityGraph>(
      GraphFromSimilarities("bench", std::move(raw), 1.0, 0.1));
  return {graph, ImportanceModel::FromGraph(graph)};
}

template <typename Fn>
void Run(benchmark::State& state, Fn&& select) {
  const auto inst = MakeInstance(static_cast<std::size_t>(state.range(0)));
  const SelectionProblem problem{inst.importance, *inst.graph,
                                 SriConfig{0.0625},
                                 BudgetSpec::Sentences(
                                     static_cast<std::size_t>(state.range(1)))};
  double score = 0.0;
  for (auto _ : state) {
    const auto selection = select(problem);
    benchmark::DoNotOptimize(selection.selected.data());
    score = selection.score;
  }
  state.counters["sri"] = score;
}

void BM_IndividualGreedy(benchmark::State& state) {
  Run(state, [](const SelectionProblem& p) { return IndividualGreedy(p); });
}

void BM_HolisticGreedy(benchmark::State& state) {
  Run(state, [](const SelectionProblem& p) { return HolisticGreedy(p); });
}

void BM_Beam4(benchmark::State& state) {
  Run(state, [](const SelectionProblem& p) { return HolisticBeam(p, 4); });
}

void BM_Beam8(benchmark::State& state) {
  Run(state, [](const SelectionProblem& p) { return HolisticBeam(p, 8); });
}

void BM_Exhaustive15(benchmark::State& state) {
  Run(state,
      [](const SelectionProblem& p) { return HolisticExhaustive(p, 15); });
}

// {sentences in the cluster, summary length}
#define HOLISUM_SIZES ->Args({50, 5})->Args({100, 5})->Args({200, 10})

BENCHMARK(BM_IndividualGreedy) HOLISUM_SIZES;
BENCHMARK(BM_HolisticGreedy) HOLISUM_SIZES;
BENCHMARK(BM_Beam4) HOLISUM_SIZES;
BENCHMARK(BM_Beam8) HOLISUM_SIZES;
BENCHMARK(BM_Exhaustive15)->Args({50, 5})->Args({100, 5});

}  // namespace
}  // namespace holisum

BENCHMARK_MAIN();
