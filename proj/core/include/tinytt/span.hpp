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

#ifndef TINYTT_SPAN_HPP
#define TINYTT_SPAN_HPP

#include <cstdint>
#include <tuple>

namespace tinytt {

/// A source region. Lines and columns are 1-based; a default-constructed
/// span (all zeros) marks synthesized terms with no source location.
struct Span {
  std::uint32_t file = 0;
  std::uint32_t start_line = 0;
  std::uint32_t start_col = 0;
  std::uint32_t end_line = 0;
  std::uint32_t end_col = 0;

  [[nodiscard]] bool valid() const noexcept { return start_line != 0; }

  /// Smallest span covering both `a` and `b`. Invalid spans are ignored.
  static Span cover(const Span& a, const Span& b) noexcept {
    if (!a.valid()) return b;
    if (!b.valid()) return a;
    Span s = a;
    if (std::tie(b.start_line, b.start_col) < std::tie(s.start_line, s.start_col)) {
      s.start_line = b.start_line;
      s.start_col = b.start_col;
    }
    if (std::tie(b.end_line, b.end_col) > std::tie(s.end_line, s.end_col)) {
      s.end_line = b.end_line;
      s.end_col = b.end_col;
    }
    return s;
  }

  friend bool operator==(const Span&, const Span&) = default;
};

}  // namespace tinytt

#endif  // TINYTT_SPAN_HPP
