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

#ifndef TINYTT_PRETTY_HPP
#define TINYTT_PRETTY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tinytt/term.hpp"

namespace tinytt {

/// Renders `t` in the surface grammar. `names` lists hints for the free
/// variables, outermost first (so `names.back()` is Var 0). Binder hints are
/// primed as needed so that the output re-parses to an alpha-equal term.
std::string pretty(const Term& t, const std::vector<std::string>& names = {});

/// `pretty`, cut to at most `width` characters with a trailing "...".
std::string pretty_truncated(const Term& t, const std::vector<std::string>& names,
                             std::size_t width);

/// True for words reserved by the surface lexer.
bool is_keyword(std::string_view word) noexcept;

}  // namespace tinytt

#endif  // TINYTT_PRETTY_HPP
