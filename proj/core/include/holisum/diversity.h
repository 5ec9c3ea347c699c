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

#ifndef HOLISUM_DIVERSITY_H_
#define HOLISUM_DIVERSITY_H_

#include <cstddef>
#include <span>
#include <string>

namespace holisum {

// Distinct n-grams over total n-grams. Defined as 1 when the summary has
// fewer than n tokens.
double UniqueNgramRatio(std::span<const std::string> tokens, std::size_t n);

}  // namespace holisum

#endif  // HOLISUM_DIVERSITY_H_
