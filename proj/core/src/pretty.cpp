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

#include "tinytt/pretty.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string_view>

namespace tinytt {

namespace {

constexpr std::array<std::string_view, 17> kKeywords = {
    "def", "fun", "U",    "refl", "J",    "K",    "Empty", "absurd",  "Unit",
    "tt",  "Nat", "zero", "succ", "Id",   "fst",  "snd",   "natElim"};

enum class Prec { Expr = 0, App = 1, Atom = 2 };

class Printer {
 public:
  explicit Printer(const Term& root) { collect_globals(root, globals_); }

  void bind_free(const std::vector<std::string>& names) {
    for (const auto& n : names) scope_.push_back(fresh(n));
  }

  // Mixed Pi/Sigma chains are bracketed so the other operator reads as a unit.
  void print_codomain(const Term& t) {
    const Term& cod = t[1];
    bool mixed = (cod.kind() == TermKind::Pi || cod.kind() == TermKind::Sigma) &&
                 cod.kind() != t.kind();
    print(cod, mixed ? Prec::Atom : Prec::Expr);
  }

  void print(const Term& t, Prec prec) {
    switch (t.kind()) {
      case TermKind::Universe: out_ += "U"; return;
      case TermKind::Refl: out_ += "refl"; return;
      case TermKind::Empty: out_ += "Empty"; return;
      case TermKind::Unit: out_ += "Unit"; return;
      case TermKind::TT: out_ += "tt"; return;
      case TermKind::Nat: out_ += "Nat"; return;
      case TermKind::Zero: out_ += "zero"; return;
      case TermKind::Global: out_ += t.name(); return;
      case TermKind::Var:
        if (t.index() < scope_.size()) {
          out_ += scope_[scope_.size() - 1 - t.index()];
        } else {
          out_ += "#" + std::to_string(t.index());
        }
        return;
      case TermKind::Pair:
        out_ += "(";
        print(t[0], Prec::Expr);
        out_ += " , ";
        print(t[1], Prec::Expr);
        out_ += ")";
        return;
      case TermKind::Lambda: {
        open(prec > Prec::Expr);
        out_ += "fun";
        std::size_t pushed = 0;
        Term cur = t;
        while (cur.kind() == TermKind::Lambda) {
          out_ += " ";
          out_ += push(cur.name(), occurs_free(cur[0], 0));
          ++pushed;
          cur = cur[0];
        }
        out_ += " => ";
        print(cur, Prec::Expr);
        pop(pushed);
        close(prec > Prec::Expr);
        return;
      }
      case TermKind::Pi:
      case TermKind::Sigma: {
        const char* op = t.kind() == TermKind::Pi ? " -> " : " * ";
        open(prec > Prec::Expr);
        if (occurs_free(t[1], 0)) {
          out_ += "(";
          std::string name = fresh(t.name());
          out_ += name;
          out_ += " : ";
          print(t[0], Prec::Expr);
          out_ += ")";
          out_ += op;
          scope_.push_back(std::move(name));
          print_codomain(t);
          pop(1);
        } else {
          print(t[0], Prec::App);
          out_ += op;
          scope_.emplace_back("_");
          print_codomain(t);
          pop(1);
        }
        close(prec > Prec::Expr);
        return;
      }
      case TermKind::App:
        open(prec > Prec::App);
        print(t[0], Prec::App);
        out_ += " ";
        print(t[1], Prec::Atom);
        close(prec > Prec::App);
        return;
      case TermKind::Fst: keyword("fst", t, prec); return;
      case TermKind::Snd: keyword("snd", t, prec); return;
      case TermKind::Succ: keyword("succ", t, prec); return;
      case TermKind::Id: keyword("Id", t, prec); return;
      case TermKind::ElimJ: keyword("J", t, prec); return;
      case TermKind::ElimK: keyword("K", t, prec); return;
      case TermKind::Absurd: keyword("absurd", t, prec); return;
      case TermKind::NatElim: keyword("natElim", t, prec); return;
    }
  }

  std::string take() { return std::move(out_); }

 private:
  // Keyword-headed forms are atoms in the grammar; they are parenthesized in
  // argument position anyway so that `f (fst x) y` reads unambiguously.
  void keyword(const char* kw, const Term& t, Prec prec) {
    open(prec > Prec::App);
    out_ += kw;
    for (const Term& k : t.children()) {
      out_ += " ";
      print(k, Prec::Atom);
    }
    close(prec > Prec::App);
  }

  void open(bool paren) {
    if (paren) out_ += "(";
  }
  void close(bool paren) {
    if (paren) out_ += ")";
  }

  std::string push(const std::string& hint, bool used) {
    std::string name = used ? fresh(hint) : std::string("_");
    scope_.push_back(name);
    return name;
  }

  void pop(std::size_t n) { scope_.resize(scope_.size() - n); }

  bool taken(const std::string& name) const {
    return is_keyword(name) || std::find(scope_.begin(), scope_.end(), name) != scope_.end() ||
           std::find(globals_.begin(), globals_.end(), name) != globals_.end();
  }

  std::string fresh(const std::string& hint) const {
    std::string name = hint.empty() || hint == "_" ? std::string("x") : hint;
    while (taken(name)) name += '\'';
    return name;
  }

  std::vector<std::string> globals_;
  std::vector<std::string> scope_;
  std::string out_;
};

}  // namespace

bool is_keyword(std::string_view word) noexcept {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::string pretty(const Term& t, const std::vector<std::string>& names) {
  Printer p(t);
  p.bind_free(names);
  p.print(t, Prec::Expr);
  return p.take();
}

std::string pretty_truncated(const Term& t, const std::vector<std::string>& names,
                             std::size_t width) {
  std::string s = pretty(t, names);
  if (s.size() > width && width > 3) {
    s.resize(width - 3);
    s += "...";
  }
  return s;
}

}  // namespace tinytt
