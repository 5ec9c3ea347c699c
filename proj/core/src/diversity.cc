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

#include "holisum/diversity.h"

#include <set>
#include <vector>

namespace holisum {

double UniqueNgramRatio(std::span<const std::string> tokens, std::size_t n) {
  if (n == 0 || tokens.size() < n) return 1.0;
  std::set<std::vector<std::string>> distinct;
  const std::size_t total = tokens.size() - n + 1;
  for (std::size_t i = 0; i < total; ++i) {
    distinct.emplace(tokens.begin() + i, tokens.begin() + i + n);
  }
  return static_cast<double>(distinct.size()) / static_cast<double>(total);
}

}  // namespace holisum
