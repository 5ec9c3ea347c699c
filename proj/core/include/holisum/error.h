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

#ifndef HOLISUM_ERROR_H_
#define HOLISUM_ERROR_H_

#include <stdexcept>
#include <string>

namespace holisum {

// Malformed or inconsistent input data (cluster files, embedding files,
// score files, selection files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid hyperparameters or option combinations.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A combinatorial search would exceed its configured subset cap.
class SearchLimitError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace holisum

#endif  // HOLISUM_ERROR_H_
