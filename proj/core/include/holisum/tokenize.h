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

#ifndef HOLISUM_TOKENIZE_H_
#define HOLISUM_TOKENIZE_H_

#include <string>
#include <string_view>
#include <vector>

namespace holisum {

// Lowercases ASCII letters and splits on every character that is not an
// ASCII letter, an ASCII digit, or part of a multi-byte UTF-8 sequence.
// Empty fragments are dropped.
std::vector<std::string> Tokenize(std::string_view text);

// Rule-based sentence splitter for documents that are not pre-segmented.
// A sentence ends at a run of '.', '!' or '?' (optionally followed by closing
// quotes or brackets) that is followed by whitespace and then an uppercase
// letter, or by the end of the text. A '.' that closes one of the
// abbreviations in AbbreviationStoplist() never ends a sentence.
std::vector<std::string> SplitSentences(std::string_view text);

const std::vector<std::string>& AbbreviationStoplist();

// Splits on ASCII whitespace.
std::vector<std::string_view> WhitespaceWords(std::string_view text);

// First `max_words` whitespace-separated words of `text`, joined by single
// spaces. Returns the text unchanged (apart from whitespace normalization)
// when it is already short enough.
std::string TruncateWords(std::string_view text, std::size_t max_words);

}  // namespace holisum

#endif  // HOLISUM_TOKENIZE_H_
