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

#include "tinytt/lexer.hpp"

#include <fmt/format.h>

#include <array>
#include <string_view>
#include <utility>

#include "tinytt/diagnostic.hpp"

namespace tinytt {

namespace {

constexpr std::array<std::pair<std::string_view, Tok>, 17> kKeywords = {{
    {"def", Tok::Def},     {"fun", Tok::Fun},         {"U", Tok::U},
    {"refl", Tok::Refl},   {"J", Tok::J},             {"K", Tok::K},
    {"Empty", Tok::Empty}, {"absurd", Tok::Absurd},   {"Unit", Tok::Unit},
    {"tt", Tok::TT},       {"Nat", Tok::Nat},         {"zero", Tok::Zero},
    {"succ", Tok::Succ},   {"natElim", Tok::NatElim}, {"Id", Tok::Id},
    {"fst", Tok::Fst},     {"snd", Tok::Snd},
}};

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '\''; }

std::size_t utf8_length(unsigned char lead) {
  if (lead >= 0xF0) return 4;
  if (lead >= 0xE0) return 3;
  if (lead >= 0xC0) return 2;
  return 1;
}

}  // namespace

std::string describe(Tok kind) {
  for (const auto& [word, tok] : kKeywords) {
    if (tok == kind) return fmt::format("'{}'", word);
  }
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::ColonEq: return "':='";
    case Tok::Arrow: return "'->'";
    case Tok::FatArrow: return "'=>'";
    case Tok::Star: return "'*'";
    case Tok::HashNormalize: return "'#normalize'";
    case Tok::HashCheck: return "'#check'";
    case Tok::Eof: return "end of file";
    default: return "token";
  }
}

std::vector<Token> lex(const SourceFile& src) {
  const std::string& text = src.text();
  std::vector<Token> out;
  std::size_t i = 0;
  auto emit = [&](Tok kind, std::size_t begin, std::size_t end) {
    out.push_back(Token{kind, text.substr(begin, end - begin), src.span(begin, end)});
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t begin = i;
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      const std::string_view word(text.data() + begin, i - begin);
      Tok kind = Tok::Ident;
      for (const auto& [kw, tok] : kKeywords) {
        if (kw == word) kind = tok;
      }
      emit(kind, begin, i);
      continue;
    }
    if (c == '#') {
      ++i;
      while (i < text.size() && ident_char(text[i])) ++i;
      const std::string_view word(text.data() + begin, i - begin);
      if (word == "#normalize") {
        emit(Tok::HashNormalize, begin, i);
      } else if (word == "#check") {
        emit(Tok::HashCheck, begin, i);
      } else {
        throw Error(ErrorCode::Syntax, fmt::format("unknown pragma '{}'", word),
                    src.span(begin, i));
      }
      continue;
    }
    auto two = [&](char next) { return i + 1 < text.size() && text[i + 1] == next; };
    switch (c) {
      case '(': emit(Tok::LParen, i, i + 1); ++i; continue;
      case ')': emit(Tok::RParen, i, i + 1); ++i; continue;
      case ',': emit(Tok::Comma, i, i + 1); ++i; continue;
      case ';': emit(Tok::Semi, i, i + 1); ++i; continue;
      case '*': emit(Tok::Star, i, i + 1); ++i; continue;
      case ':':
        if (two('=')) {
          emit(Tok::ColonEq, i, i + 2);
          i += 2;
        } else {
          emit(Tok::Colon, i, i + 1);
          ++i;
        }
        continue;
      case '-':
        if (two('>')) {
          emit(Tok::Arrow, i, i + 2);
          i += 2;
          continue;
        }
        break;
      case '=':
        if (two('>')) {
          emit(Tok::FatArrow, i, i + 2);
          i += 2;
          continue;
        }
        break;
      default:
        break;
    }
    const std::size_t len = std::min(utf8_length(static_cast<unsigned char>(c)), text.size() - i);
    throw Error(ErrorCode::Syntax,
                fmt::format("illegal character '{}'", text.substr(i, len)), src.span(i, i + len));
  }
  emit(Tok::Eof, text.size(), text.size());
  return out;
}

}  // namespace tinytt
