// Copyright 2026 The Authors.
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

#ifndef HLAB_SRC_TEXT_HPP_
#define HLAB_SRC_TEXT_HPP_

// Line/word helpers shared by the text parsers.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "hlab/errors.hpp"

namespace hlab::text {

struct Line {
  std::size_t number;
  std::vector<std::string_view> words;
};

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !space(line[j])) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

// Non-blank lines, 1-based numbering preserved.
inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto words = split_words(text.substr(start, end - start));
    if (!words.empty()) lines.push_back({number, std::move(words)});
    start = end + 1;
  }
  return lines;
}

template <typename Int>
Int parse_int(std::string_view word, std::size_t line) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace hlab::text

#endif  // HLAB_SRC_TEXT_HPP_
