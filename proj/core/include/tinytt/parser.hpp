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

#ifndef TINYTT_PARSER_HPP
#define TINYTT_PARSER_HPP

#include <string>
#include <variant>
#include <vector>

#include "tinytt/lexer.hpp"
#include "tinytt/span.hpp"
#include "tinytt/term.hpp"

namespace tinytt {

/// Surface expression: a core former over named (unresolved) variables.
/// Binder formers carry the bound name in `name`; an empty name marks the
/// anonymous binder of `A -> B` / `A * B`, and `_` is never referenceable.
struct Expr {
  bool is_ident = false;
  TermKind kind = TermKind::Universe;
  std::string name;
  std::vector<Expr> children;
  Span span;
};

struct SurfaceDefinition {
  std::string name;
  Span name_span;
  Expr type;
  Expr body;
  Span span;
};

enum class PragmaKind { Normalize, Check };

/// `#normalize e;` carries [e]; `#check e : T;` carries [e, T].
struct SurfacePragma {
  PragmaKind kind;
  std::vector<Expr> payload;
  Span span;
};

using SurfaceDecl = std::variant<SurfaceDefinition, SurfacePragma>;

/// Parses a whole file. Throws `Error` (E001) naming the expected tokens.
std::vector<SurfaceDecl> parse(const std::vector<Token>& tokens);

/// Parses a token stream holding exactly one expression.
Expr parse_expression(const std::vector<Token>& tokens);

}  // namespace tinytt

#endif  // TINYTT_PARSER_HPP
