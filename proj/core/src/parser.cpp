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

#include "tinytt/parser.hpp"

#include <fmt/format.h>

#include <initializer_list>
#include <utility>

#include "tinytt/diagnostic.hpp"

namespace tinytt {

namespace {

Expr former(TermKind kind, std::vector<Expr> children, Span span, std::string name = {}) {
  return Expr{false, kind, std::move(name), std::move(children), span};
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  std::vector<SurfaceDecl> file() {
    std::vector<SurfaceDecl> out;
    while (!at(Tok::Eof)) out.push_back(decl());
    return out;
  }

  Expr single() {
    Expr e = expr();
    expect({Tok::Eof});
    return e;
  }

 private:
  SurfaceDecl decl() {
    const Token& head = peek();
    switch (head.kind) {
      case Tok::Def: {
        advance();
        const Token& name = expect({Tok::Ident});
        expect({Tok::Colon});
        Expr type = expr();
        expect({Tok::ColonEq});
        Expr body = expr();
        const Token& semi = expect({Tok::Semi});
        return SurfaceDefinition{name.text, name.span, std::move(type), std::move(body),
                                 Span::cover(head.span, semi.span)};
      }
      case Tok::HashNormalize: {
        advance();
        Expr e = expr();
        expect({Tok::Semi});
        return SurfacePragma{PragmaKind::Normalize, {std::move(e)}, head.span};
      }
      case Tok::HashCheck: {
        advance();
        Expr e = expr();
        expect({Tok::Colon});
        Expr type = expr();
        expect({Tok::Semi});
        return SurfacePragma{PragmaKind::Check, {std::move(e), std::move(type)}, head.span};
      }
      default:
        fail({Tok::Def, Tok::HashNormalize, Tok::HashCheck});
    }
  }

  Expr expr() {
    if (at(Tok::Fun)) {
      const Span start = advance().span;
      std::vector<const Token*> binders;
      do {
        binders.push_back(&expect({Tok::Ident}));
      } while (at(Tok::Ident));
      expect({Tok::FatArrow});
      Expr body = expr();
      const Span whole = Span::cover(start, body.span);
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        body = former(TermKind::Lambda, {std::move(body)}, whole, (*it)->text);
      }
      return body;
    }
    return quant();
  }

  Expr quant() {
    if (at(Tok::LParen) && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon) {
      const Span start = advance().span;
      const Token& name = advance();
      advance();
      Expr dom = expr();
      expect({Tok::RParen});
      const TermKind kind = expect({Tok::Arrow, Tok::Star}).kind == Tok::Arrow ? TermKind::Pi
                                                                                 : TermKind::Sigma;
      Expr cod = expr();
      const Span whole = Span::cover(start, cod.span);
      return former(kind, {std::move(dom), std::move(cod)}, whole, name.text);
    }
    Expr lhs = app();
    if (at(Tok::Arrow) || at(Tok::Star)) {
      const TermKind kind = advance().kind == Tok::Arrow ? TermKind::Pi : TermKind::Sigma;
      Expr rhs = expr();
      const Span whole = Span::cover(lhs.span, rhs.span);
      return former(kind, {std::move(lhs), std::move(rhs)}, whole);
    }
    return lhs;
  }

  Expr app() {
    Expr fn = atom();
    while (starts_atom(peek().kind)) {
      Expr arg = atom();
      const Span whole = Span::cover(fn.span, arg.span);
      fn = former(TermKind::App, {std::move(fn), std::move(arg)}, whole);
    }
    return fn;
  }

  static bool starts_atom(Tok k) {
    switch (k) {
      case Tok::Ident: case Tok::U: case Tok::Refl: case Tok::TT: case Tok::Zero:
      case Tok::Nat: case Tok::Unit: case Tok::Empty: case Tok::LParen: case Tok::Fst:
      case Tok::Snd: case Tok::Succ: case Tok::Id: case Tok::J: case Tok::K:
      case Tok::Absurd: case Tok::NatElim:
        return true;
      default:
        return false;
    }
  }

  Expr keyword(TermKind kind) {
    const Span start = advance().span;
    std::vector<Expr> args;
    Span whole = start;
    for (std::size_t i = 0; i < arity(kind); ++i) {
      args.push_back(atom());
      whole = Span::cover(whole, args.back().span);
    }
    return former(kind, std::move(args), whole);
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        advance();
        return Expr{true, TermKind::Global, t.text, {}, t.span};
      case Tok::U: advance(); return former(TermKind::Universe, {}, t.span);
      case Tok::Refl: advance(); return former(TermKind::Refl, {}, t.span);
      case Tok::TT: advance(); return former(TermKind::TT, {}, t.span);
      case Tok::Zero: advance(); return former(TermKind::Zero, {}, t.span);
      case Tok::Nat: advance(); return former(TermKind::Nat, {}, t.span);
      case Tok::Unit: advance(); return former(TermKind::Unit, {}, t.span);
      case Tok::Empty: advance(); return former(TermKind::Empty, {}, t.span);
      case Tok::Fst: return keyword(TermKind::Fst);
      case Tok::Snd: return keyword(TermKind::Snd);
      case Tok::Succ: return keyword(TermKind::Succ);
      case Tok::Id: return keyword(TermKind::Id);
      case Tok::J: return keyword(TermKind::ElimJ);
      case Tok::K: return keyword(TermKind::ElimK);
      case Tok::Absurd: return keyword(TermKind::Absurd);
      case Tok::NatElim: return keyword(TermKind::NatElim);
      case Tok::LParen: {
        const Span open = advance().span;
        Expr first = expr();
        if (at(Tok::Comma)) {
          advance();
          Expr second = expr();
          const Span close = expect({Tok::RParen}).span;
          return former(TermKind::Pair, {std::move(first), std::move(second)},
                        Span::cover(open, close));
        }
        expect({Tok::Comma, Tok::RParen});
        return first;
      }
      default:
        throw Error(ErrorCode::Syntax,
                    fmt::format("expected an expression, found {}", found(t)), t.span);
    }
  }

  static std::string found(const Token& t) {
    if (t.kind == Tok::Ident) return fmt::format("identifier '{}'", t.text);
    return describe(t.kind);
  }

  [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
    std::string want;
    std::size_t n = 0;
    for (Tok k : expected) {
      if (n > 0) want += n + 1 == expected.size() ? " or " : ", ";
      want += describe(k);
      ++n;
    }
    throw Error(ErrorCode::Syntax, fmt::format("expected {}, found {}", want, found(peek())),
                peek().span);
  }

  const Token& expect(std::initializer_list<Tok> kinds) {
    for (Tok k : kinds) {
      if (at(k)) return advance();
    }
    fail(kinds);
  }

  [[nodiscard]] const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  [[nodiscard]] bool at(Tok k) const { return peek().kind == k; }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<SurfaceDecl> parse(const std::vector<Token>& tokens) {
  if (tokens.empty()) return {};
  return Parser(tokens).file();
}

Expr parse_expression(const std::vector<Token>& tokens) {
  if (tokens.empty()) throw Error(ErrorCode::Syntax, "expected an expression", Span{});
  return Parser(tokens).single();
}

}  // namespace tinytt
