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

#ifndef TINYTT_SOURCE_HPP
#define TINYTT_SOURCE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tinytt/span.hpp"

namespace tinytt {

/// A UTF-8 source text with a precomputed line table. Columns count code
/// points, not bytes.
class SourceFile {
 public:
  SourceFile(std::string name, std::string text, std::uint32_t id = 1);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const std::string& text() const noexcept { return text_; }
  [[nodiscard]] std::uint32_t id() const noexcept { return id_; }
  [[nodiscard]] std::size_t line_count() const noexcept { return line_starts_.size(); }

  /// 1-based (line, column) of a byte offset; offset == size() is allowed.
  [[nodiscard]] std::pair<std::uint32_t, std::uint32_t> location(std::size_t offset) const;

  /// Span of the byte range [begin, end).
  [[nodiscard]] Span span(std::size_t begin, std::size_t end) const;

  /// Does `s` name a region inside this file's text?
  [[nodiscard]] bool contains(const Span& s) const;

 private:
  std::string name_;
  std::string text_;
  std::uint32_t id_;
  std::vector<std::size_t> line_starts_;
};

}  // namespace tinytt

#endif  // TINYTT_SOURCE_HPP
