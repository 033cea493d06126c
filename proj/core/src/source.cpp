// Copyright 2026 The tinytt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tinytt/source.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

namespace tinytt {

namespace {

bool is_continuation(char c) {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

}  // namespace

SourceFile::SourceFile(std::string name, std::string text, std::uint32_t id)
    : name_(std::move(name)), text_(std::move(text)), id_(id) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (text_[i] == '\n') line_starts_.push_back(i + 1);
  }
}

std::pair<std::uint32_t, std::uint32_t> SourceFile::location(std::size_t offset) const {
  assert(offset <= text_.size());
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  const std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
  const std::size_t start = line_starts_[line - 1];
  std::uint32_t col = 1;
  for (std::size_t i = start; i < offset; ++i) {
    if (!is_continuation(text_[i])) ++col;
  }
  return {static_cast<std::uint32_t>(line), col};
}

Span SourceFile::span(std::size_t begin, std::size_t end) const {
  auto [sl, sc] = location(begin);
  auto [el, ec] = location(std::max(begin, end));
  return Span{id_, sl, sc, el, ec};
}

bool SourceFile::contains(const Span& s) const {
  if (!s.valid() || s.file != id_) return false;
  if (s.end_line > line_starts_.size()) return false;
  if (std::tie(s.start_line, s.start_col) > std::tie(s.end_line, s.end_col)) return false;
  // Column of the newline (or end of text) terminating `line`; spans are
  // end-exclusive so they may reach exactly this column.
  auto limit = [&](std::uint32_t line) {
    const std::size_t end = line < line_starts_.size() ? line_starts_[line] - 1 : text_.size();
    return location(end).second;
  };
  return s.start_col >= 1 && s.start_col <= limit(s.start_line) && s.end_col <= limit(s.end_line);
}

}  // namespace tinytt
