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

// holisum: extractive multi-document summarization with subset scoring.
//
//   holisum summarize --clusters c.jsonl [--preset multinews] ...
//   holisum evaluate  --selections s.jsonl --clusters c.jsonl ...
//   holisum sweep     --clusters c.jsonl --grid-lambda 0.01,0.1 ...
//
// Exit codes: 0 success, 1 input error, 2 config error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holisum/config.h"
#include "holisum/error.h"
#include "holisum/pipeline.h"

namespace {

using namespace holisum;

constexpr int kExitInput = 1;
constexpr int kExitConfig = 2;

struct RunFlags {
  std::string config_file;
  std::optional<std::string> preset;
  std::optional<std::string> method;
  std::optional<double> alpha, theta, lambda;
  std::optional<std::size_t> beam_size, prefilter, sentences, word_limit, jobs;
  std::optional<std::string> clusters, embeddings, importance, output;
  bool skip_errors = false;
  bool timing = false;
};

void AddRunFlags(CLI::App& app, RunFlags& f) {
  app.add_option("--config", f.config_file, "JSON config file");
  app.add_option("--preset", f.preset, "duc | tac | multinews | wikisum");
  app.add_option("--clusters", f.clusters, "cluster JSONL file");
  app.add_option("--embeddings", f.embeddings, "sentence embedding JSONL");
  app.add_option("--importance", f.importance,
                 "external importance score JSONL");
  app.add_option("--method", f.method,
                 "individual-greedy | holistic-greedy | beam | exhaustive");
  app.add_option("--alpha", f.alpha, "tf-idf weight in the similarity blend");
  app.add_option("--theta", f.theta, "edge threshold position in [0, 1]");
  app.add_option("--lambda", f.lambda, "redundancy weight");
  app.add_option("--beam-size", f.beam_size, "beam width");
  app.add_option("--prefilter", f.prefilter,
                 "sentences kept for exhaustive search");
  auto* sentences =
      app.add_option("--sentences", f.sentences, "summary length in sentences");
  auto* words =
      app.add_option("--word-limit", f.word_limit, "summary length in words");
  sentences->excludes(words);
  app.add_option("--jobs", f.jobs, "clusters processed in parallel");
  app.add_option("--output", f.output, "output path (default stdout)");
  app.add_flag("--skip-errors", f.skip_errors,
               "skip failing clusters instead of aborting");
}

RunConfig ResolveRunConfig(const RunFlags& f) {
  ConfigOverrides file;
  if (!f.config_file.empty()) file = LoadConfigFile(f.config_file);
  ConfigOverrides flags;
  if (f.preset) {
    flags.preset = ParsePreset(*f.preset);
    if (!flags.preset) throw ConfigError("unknown preset " + *f.preset);
  }
  if (f.method) {
    flags.method = ParseMethod(*f.method);
    if (!flags.method) throw ConfigError("unknown method " + *f.method);
  }
  flags.alpha = f.alpha;
  flags.theta = f.theta;
  flags.lambda = f.lambda;
  flags.beam_size = f.beam_size;
  flags.prefilter_size = f.prefilter;
  flags.sentences = f.sentences;
  flags.word_limit = f.word_limit;
  flags.jobs = f.jobs;
  flags.clusters = f.clusters;
  flags.embeddings = f.embeddings;
  flags.importance = f.importance;
  flags.output = f.output;
  // A budget flag replaces whichever budget the file or preset chose.
  if (flags.sentences || flags.word_limit) {
    file.sentences.reset();
    file.word_limit.reset();
  }
  RunConfig config = ResolveConfig(file, flags);
  config.skip_errors = f.skip_errors;
  config.timing = f.timing;
  if (config.clusters.empty()) throw ConfigError("--clusters is required");
  config.Validate();
  return config;
}

struct RougeFlags {
  std::optional<std::string> preset;
  std::string variants = "r1,r2,rl,rlsum,rsu4";
  bool no_stem = false;
  std::optional<std::size_t> word_limit;
  std::string multi_ref = "max";
};

void AddRougeFlags(CLI::App& app, RougeFlags& f) {
  app.add_option("--variants", f.variants,
                 "comma-separated subset of r1,r2,rl,rlsum,rsu4");
  app.add_flag("--no-stem", f.no_stem, "disable Porter stemming");
  app.add_option("--rouge-word-limit", f.word_limit,
                 "score only the first N words of each text");
  app.add_option("--multi-ref", f.multi_ref, "max | average");
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

RougeConfig ResolveRougeConfig(const RougeFlags& f,
                               std::optional<std::string> preset) {
  RougeConfig config;
  if (preset) {
    auto p = ParsePreset(*preset);
    if (!p) throw ConfigError("unknown preset " + *preset);
    config = PresetRougeConfig(*p);
  }
  config.variants.clear();
  for (const auto& name : SplitList(f.variants)) {
    auto v = ParseVariant(name);
    if (!v) throw ConfigError("unknown ROUGE variant " + name);
    config.variants.push_back(*v);
  }
  if (f.no_stem) config.stemming = false;
  if (f.word_limit) config.word_limit = *f.word_limit;
  if (f.multi_ref == "max") {
    config.multi_ref = MultiRefPolicy::kMax;
  } else if (f.multi_ref == "average") {
    config.multi_ref = MultiRefPolicy::kAverage;
  } else {
    throw ConfigError("--multi-ref must be max or average");
  }
  config.Validate();
  return config;
}

// Writes to `path`, or stdout when empty.
template <typename Fn>
void WithOutput(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  fn(out);
}

template <typename T>
std::vector<T> ParseGrid(const std::string& list, const char* flag) {
  std::vector<T> out;
  for (const auto& item : SplitList(list)) {
    try {
      std::size_t used = 0;
      if constexpr (std::is_same_v<T, double>) {
        out.push_back(std::stod(item, &used));
      } else {
        const long long v = std::stoll(item, &used);
        if (v <= 0) throw std::invalid_argument(item);
        out.push_back(static_cast<T>(v));
      }
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string("bad value '") + item + "' in " + flag);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extractive multi-document summarization with holistic subset "
               "selection"};
  app.require_subcommand(1);

  RunFlags summarize_flags;
  auto* summarize = app.add_subcommand("summarize", "select summary sentences");
  AddRunFlags(*summarize, summarize_flags);
  summarize->add_flag("--timing", summarize_flags.timing,
                      "record per-cluster elapsed_ms");

  std::string selections_path, eval_clusters, eval_output, diversity_csv;
  std::string format = "json";
  std::optional<std::string> eval_preset;
  RougeFlags eval_rouge;
  auto* evaluate = app.add_subcommand("evaluate", "score selections");
  evaluate->add_option("--selections", selections_path, "selection JSONL")
      ->required();
  evaluate->add_option("--clusters", eval_clusters, "cluster JSONL")
      ->required();
  evaluate->add_option("--preset", eval_preset, "ROUGE settings of a dataset");
  evaluate->add_option("--format", format, "json | table");
  evaluate->add_option("--diversity-csv", diversity_csv,
                       "also write unique n-gram ratios as CSV");
  evaluate->add_option("--output", eval_output, "output path (default stdout)");
  AddRougeFlags(*evaluate, eval_rouge);

  RunFlags sweep_flags;
  RougeFlags sweep_rouge;
  std::string grid_lambda, grid_alpha, grid_theta, grid_beam, grid_method;
  bool no_runtime = false;
  auto* sweep = app.add_subcommand("sweep", "grid search to CSV");
  AddRunFlags(*sweep, sweep_flags);
  AddRougeFlags(*sweep, sweep_rouge);
  sweep->add_option("--grid-lambda", grid_lambda, "comma-separated lambdas");
  sweep->add_option("--grid-alpha", grid_alpha, "comma-separated alphas");
  sweep->add_option("--grid-theta", grid_theta, "comma-separated thetas");
  sweep->add_option("--grid-beam", grid_beam, "comma-separated beam sizes");
  sweep->add_option("--grid-method", grid_method, "comma-separated methods");
  sweep->add_flag("--no-runtime", no_runtime, "omit the runtime column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (summarize->parsed()) {
      const RunConfig config = ResolveRunConfig(summarize_flags);
      std::size_t failed = 0;
      WithOutput(config.output.string(), [&](std::ostream& out) {
        failed = RunSummarize(config, out);
      });
      if (failed > 0) {
        std::cerr << failed << " cluster(s) skipped after errors\n";
      }
    } else if (evaluate->parsed()) {
      const RougeConfig rouge = ResolveRougeConfig(eval_rouge, eval_preset);
      if (format != "json" && format != "table") {
        throw ConfigError("--format must be json or table");
      }
      std::ifstream in(selections_path);
      if (!in) throw InputError("cannot open " + selections_path);
      const auto selections = ParseSelections(in);
      const auto clusters = LoadClusters(eval_clusters);
      const EvalReport report =
          EvaluateSelections(selections, clusters, RougeScorer(rouge));
      WithOutput(eval_output, [&](std::ostream& out) {
        out << (format == "json" ? ReportToJson(report)
                                 : ReportToTable(report));
      });
      if (!diversity_csv.empty()) {
        WithOutput(diversity_csv,
                   [&](std::ostream& out) { out << DiversityCsv(report); });
      }
    } else if (sweep->parsed()) {
      const RunConfig base = ResolveRunConfig(sweep_flags);
      const RougeConfig rouge =
          ResolveRougeConfig(sweep_rouge, sweep_flags.preset);
      SweepGrid grid;
      grid.lambdas = ParseGrid<double>(grid_lambda, "--grid-lambda");
      grid.alphas = ParseGrid<double>(grid_alpha, "--grid-alpha");
      grid.thetas = ParseGrid<double>(grid_theta, "--grid-theta");
      grid.beam_sizes = ParseGrid<std::size_t>(grid_beam, "--grid-beam");
      grid.methods.clear();
      for (const auto& name : SplitList(grid_method)) {
        auto m = ParseMethod(name);
        if (!m) throw ConfigError("unknown method " + name);
        grid.methods.push_back(*m);
      }

      const auto clusters = LoadClusters(base.clusters);
      std::optional<EmbeddingStore> embeddings;
      std::optional<ImportanceStore> importance;
      SideInputs side;
      if (!base.embeddings.empty()) {
        embeddings = EmbeddingStore::Load(base.embeddings);
        side.embeddings = &*embeddings;
      }
      if (!base.importance.empty()) {
        importance = ImportanceStore::Load(base.importance);
        side.importance = &*importance;
      }
      const auto rows =
          RunSweep(clusters, base, grid, side, RougeScorer(rouge));
      WithOutput(base.output.string(), [&](std::ostream& out) {
        out << SweepCsv(rows, rouge, !no_runtime);
      });
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
