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

#ifndef TINYTT_RESOLVE_HPP
#define TINYTT_RESOLVE_HPP

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tinytt/kernel.hpp"
#include "tinytt/parser.hpp"
#include "tinytt/term.hpp"

namespace tinytt {

struct CorePragma {
  PragmaKind kind;
  std::vector<Term> payload;
  Span span;
};

using CoreDecl = std::variant<Declaration, CorePragma>;

using GlobalPredicate = std::function<bool(std::string_view)>;

/// Turns names into indices (innermost binder = 0) or Global references.
/// `scope` lists the enclosing binder names, outermost first. Throws E002.
Term resolve_expr(const Expr& e, std::vector<std::string>& scope, const GlobalPredicate& is_global);

CoreDecl resolve_decl(const SurfaceDecl& d, const GlobalPredicate& is_global);

/// Resolves a whole file. Each definition becomes visible to the
/// declarations after it; forward references are unbound.
std::vector<CoreDecl> resolve(const std::vector<SurfaceDecl>& decls,
                              std::vector<std::string> known_globals);

}  // namespace tinytt

#endif  // TINYTT_RESOLVE_HPP
