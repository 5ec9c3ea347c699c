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

#include "holisum/tokenize.h"

#include <algorithm>

namespace holisum {
namespace {

bool IsTokenByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool IsCloser(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && IsSpace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// The whitespace-delimited word that ends just before `pos`, with leading
// opening punctuation removed.
std::string_view WordBefore(std::string_view text, std::size_t pos) {
  std::size_t begin = pos;
  while (begin > 0 && !IsSpace(static_cast<unsigned char>(text[begin - 1]))) {
    --begin;
  }
  std::string_view word = text.substr(begin, pos - begin);
  while (!word.empty() && (word.front() == '(' || word.front() == '"' ||
                           word.front() == '\'' || word.front() == '[')) {
    word.remove_prefix(1);
  }
  return word;
}

bool IsAbbreviation(std::string_view word) {
  const auto& stoplist = AbbreviationStoplist();
  return std::find(stoplist.begin(), stoplist.end(), word) != stoplist.end();
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (IsTokenByte(c)) {
      current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                             : ch);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

const std::vector<std::string>& AbbreviationStoplist() {
  static const std::vector<std::string> kStoplist = {
      "Mr", "Mrs", "Dr", "U.S", "Inc", "St", "No", "vs"};
  return kStoplist;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (!IsTerminator(text[i])) {
      ++i;
      continue;
    }
    const std::size_t run_begin = i;
    std::size_t end = i;
    while (end < n && IsTerminator(text[end])) ++end;
    while (end < n && IsCloser(text[end])) ++end;

    std::size_t next = end;
    while (next < n && IsSpace(static_cast<unsigned char>(text[next]))) ++next;
    const bool at_end = next == n;
    const bool boundary =
        at_end || (next > end && text[next] >= 'A' && text[next] <= 'Z');
    const bool abbreviation =
        text[run_begin] == '.' && end == run_begin + 1 &&
        IsAbbreviation(WordBefore(text, run_begin));

    if (boundary && !abbreviation) {
      std::string_view sentence = Trim(text.substr(start, end - start));
      if (!sentence.empty()) sentences.emplace_back(sentence);
      start = next;
    }
    i = end;
  }
  std::string_view tail = Trim(text.substr(std::min(start, n)));
  if (!tail.empty()) sentences.emplace_back(tail);
  return sentences;
}

std::vector<std::string_view> WhitespaceWords(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t begin = i;
    while (i < text.size() && !IsSpace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > begin) words.push_back(text.substr(begin, i - begin));
  }
  return words;
}

std::string TruncateWords(std::string_view text, std::size_t max_words) {
  auto words = WhitespaceWords(text);
  if (words.size() > max_words) words.resize(max_words);
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.append(words[i]);
  }
  return out;
}

}  // namespace holisum
