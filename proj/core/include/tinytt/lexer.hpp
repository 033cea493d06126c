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

#ifndef TINYTT_LEXER_HPP
#define TINYTT_LEXER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tinytt/source.hpp"
#include "tinytt/span.hpp"

namespace tinytt {

enum class Tok : std::uint8_t {
  Ident,
  // keywords
  Def, Fun, U, Refl, J, K, Empty, Absurd, Unit, TT, Nat, Zero, Succ, NatElim, Id, Fst, Snd,
  // punctuation
  LParen, RParen, Comma, Semi, Colon, ColonEq, Arrow, FatArrow, Star,
  // pragmas
  HashNormalize, HashCheck,
  Eof,
};

/// How a token kind is written in source, e.g. "'->'" or "identifier".
std::string describe(Tok kind);

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

/// Tokenizes `src`. Line comments start with `--`. Throws `Error` (E001) on
/// any character outside the token set. The result always ends with Eof.
std::vector<Token> lex(const SourceFile& src);

}  // namespace tinytt

#endif  // TINYTT_LEXER_HPP
