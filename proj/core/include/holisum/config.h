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

#ifndef HOLISUM_CONFIG_H_
#define HOLISUM_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "holisum/inference.h"
#include "holisum/rouge.h"

namespace holisum {

// Dataset presets carrying tuned hyperparameters.
enum class Preset { kDuc, kTac, kMultiNews, kWikiSum };

std::string_view PresetName(Preset preset);
std::optional<Preset> ParsePreset(std::string_view name);

struct RunConfig {
  double alpha = 0.9;
  double theta = 0.1;
  double lambda = 0.0625;
  Method method = Method::kBeam;
  std::size_t beam_size = 4;
  std::size_t prefilter_size = 15;
  BudgetSpec budget = BudgetSpec::Sentences(10);

  std::filesystem::path clusters;
  std::filesystem::path embeddings;  // empty: tf-idf only
  std::filesystem::path importance;  // empty: graph centrality
  std::filesystem::path output;      // empty: stdout

  std::size_t jobs = 1;
  bool skip_errors = false;
  // Adds per-cluster "elapsed_ms" to the selection output. Off by default so
  // that repeated runs produce identical bytes.
  bool timing = false;
  std::uint64_t max_subsets = 10'000'000;

  // Throws ConfigError.
  void Validate() const;
};

RunConfig PresetConfig(Preset preset);
// DUC and TAC score the first 100 words with stemming; the large news and
// wiki corpora use full summaries.
RougeConfig PresetRougeConfig(Preset preset);

// Optional settings from a config file or from command-line flags.
struct ConfigOverrides {
  std::optional<Preset> preset;
  std::optional<double> alpha;
  std::optional<double> theta;
  std::optional<double> lambda;
  std::optional<Method> method;
  std::optional<std::size_t> beam_size;
  std::optional<std::size_t> prefilter_size;
  std::optional<std::size_t> sentences;
  std::optional<std::size_t> word_limit;
  std::optional<std::size_t> jobs;
  std::optional<std::string> clusters;
  std::optional<std::string> embeddings;
  std::optional<std::string> importance;
  std::optional<std::string> output;
};

// Reads a JSON object whose keys mirror the long flag names with
// underscores ("beam_size", "word_limit", ...). Unknown keys are rejected.
ConfigOverrides ParseConfigOverrides(std::string_view json_text);
ConfigOverrides LoadConfigFile(const std::filesystem::path& path);

void ApplyOverrides(RunConfig& config, const ConfigOverrides& overrides);

// Flags > config file > preset > built-in defaults.
RunConfig ResolveConfig(const ConfigOverrides& file,
                        const ConfigOverrides& flags);

}  // namespace holisum

#endif  // HOLISUM_CONFIG_H_
