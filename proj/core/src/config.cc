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

#include "holisum/config.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "holisum/error.h"
#include "json.hpp"

namespace holisum {
namespace {

using nlohmann::json;

template <typename T>
T Get(const json& obj, const std::string& key) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key \"" + key + "\" has the wrong type");
  }
}

std::size_t GetCount(const json& obj, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw ConfigError("config key \"" + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

std::string_view PresetName(Preset preset) {
  switch (preset) {
    case Preset::kDuc:
      return "duc";
    case Preset::kTac:
      return "tac";
    case Preset::kMultiNews:
      return "multinews";
    case Preset::kWikiSum:
      return "wikisum";
  }
  return "unknown";
}

std::optional<Preset> ParsePreset(std::string_view name) {
  for (Preset p :
       {Preset::kDuc, Preset::kTac, Preset::kMultiNews, Preset::kWikiSum}) {
    if (PresetName(p) == name) return p;
  }
  return std::nullopt;
}

void RunConfig::Validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("alpha must lie in [0, 1]");
  }
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw ConfigError("theta must lie in [0, 1]");
  }
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw ConfigError("lambda must be finite and >= 0");
  }
  if (beam_size == 0) throw ConfigError("beam size must be positive");
  if (prefilter_size == 0) throw ConfigError("prefilter size must be positive");
  if (jobs == 0) throw ConfigError("jobs must be positive");
  budget.Validate();
  if (method == Method::kExhaustive && !budget.word_limited() &&
      prefilter_size < budget.n_sentences) {
    throw ConfigError("prefilter size must be at least the sentence budget");
  }
}

RunConfig PresetConfig(Preset preset) {
  RunConfig c;
  c.method = Method::kBeam;
  switch (preset) {
    case Preset::kDuc:
      c.alpha = 0.9;
      c.theta = 0.0;
      c.lambda = std::ldexp(1.0, -13);
      c.beam_size = 4;
      c.budget = BudgetSpec::Words(100);
      break;
    case Preset::kTac:
      c.alpha = 0.9;
      c.theta = 0.0;
      c.lambda = std::ldexp(1.0, -7);
      c.beam_size = 4;
      c.budget = BudgetSpec::Words(100);
      break;
    case Preset::kMultiNews:
      c.alpha = 0.9;
      c.theta = 0.1;
      c.lambda = std::ldexp(1.0, -4);
      c.beam_size = 4;
      c.budget = BudgetSpec::Sentences(10);
      break;
    case Preset::kWikiSum:
      c.alpha = 0.8;
      c.theta = 0.1;
      c.lambda = std::ldexp(1.0, -6);
      c.beam_size = 3;
      c.budget = BudgetSpec::Sentences(5);
      break;
  }
  return c;
}

RougeConfig PresetRougeConfig(Preset preset) {
  RougeConfig r;
  r.stemming = true;
  if (preset == Preset::kDuc || preset == Preset::kTac) r.word_limit = 100;
  return r;
}

ConfigOverrides ParseConfigOverrides(std::string_view json_text) {
  json obj;
  try {
    obj = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config file: ") + e.what());
  }
  if (!obj.is_object()) throw ConfigError("config file must hold an object");

  ConfigOverrides o;
  for (const auto& [key, value] : obj.items()) {
    if (key == "preset") {
      o.preset = ParsePreset(Get<std::string>(obj, key));
      if (!o.preset) throw ConfigError("unknown preset in config file");
    } else if (key == "alpha") {
      o.alpha = Get<double>(obj, key);
    } else if (key == "theta") {
      o.theta = Get<double>(obj, key);
    } else if (key == "lambda") {
      o.lambda = Get<double>(obj, key);
    } else if (key == "method") {
      o.method = ParseMethod(Get<std::string>(obj, key));
      if (!o.method) throw ConfigError("unknown method in config file");
    } else if (key == "beam_size") {
      o.beam_size = GetCount(obj, key);
    } else if (key == "prefilter" || key == "prefilter_size") {
      o.prefilter_size = GetCount(obj, key);
    } else if (key == "sentences") {
      o.sentences = GetCount(obj, key);
    } else if (key == "word_limit") {
      o.word_limit = GetCount(obj, key);
    } else if (key == "jobs") {
      o.jobs = GetCount(obj, key);
    } else if (key == "clusters") {
      o.clusters = Get<std::string>(obj, key);
    } else if (key == "embeddings") {
      o.embeddings = Get<std::string>(obj, key);
    } else if (key == "importance") {
      o.importance = Get<std::string>(obj, key);
    } else if (key == "output") {
      o.output = Get<std::string>(obj, key);
    } else {
      throw ConfigError("unknown config key \"" + key + "\"");
    }
  }
  if (o.sentences && o.word_limit) {
    throw ConfigError("config file sets both sentences and word_limit");
  }
  return o;
}

ConfigOverrides LoadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfigOverrides(text.str());
}

void ApplyOverrides(RunConfig& config, const ConfigOverrides& o) {
  if (o.alpha) config.alpha = *o.alpha;
  if (o.theta) config.theta = *o.theta;
  if (o.lambda) config.lambda = *o.lambda;
  if (o.method) config.method = *o.method;
  if (o.beam_size) config.beam_size = *o.beam_size;
  if (o.prefilter_size) config.prefilter_size = *o.prefilter_size;
  if (o.sentences) config.budget = BudgetSpec::Sentences(*o.sentences);
  if (o.word_limit) config.budget = BudgetSpec::Words(*o.word_limit);
  if (o.jobs) config.jobs = *o.jobs;
  if (o.clusters) config.clusters = *o.clusters;
  if (o.embeddings) config.embeddings = *o.embeddings;
  if (o.importance) config.importance = *o.importance;
  if (o.output) config.output = *o.output;
}

RunConfig ResolveConfig(const ConfigOverrides& file,
                        const ConfigOverrides& flags) {
  std::optional<Preset> preset = flags.preset ? flags.preset : file.preset;
  RunConfig config = preset ? PresetConfig(*preset) : RunConfig{};
  ApplyOverrides(config, file);
  ApplyOverrides(config, flags);
  return config;
}

}  // namespace holisum
