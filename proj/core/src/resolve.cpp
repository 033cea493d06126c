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

#include "tinytt/resolve.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <utility>

#include "tinytt/diagnostic.hpp"

namespace tinytt {

Term resolve_expr(const Expr& e, std::vector<std::string>& scope,
                  const GlobalPredicate& is_global) {
  if (e.is_ident) {
    if (e.name != "_") {
      auto it = std::find(scope.rbegin(), scope.rend(), e.name);
      if (it != scope.rend()) {
        return mk::var(static_cast<std::uint32_t>(it - scope.rbegin()), e.span);
      }
      if (is_global(e.name)) return mk::global(e.name, e.span);
    }
    throw Error(ErrorCode::UnboundName, fmt::format("unbound name '{}'", e.name), e.span);
  }
  std::vector<Term> kids;
  kids.reserve(e.children.size());
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (binds(e.kind, i)) {
      // "_" and the anonymous arrow binder are pushed as "" so that no
      // identifier can refer to them.
      scope.push_back(e.name == "_" ? std::string() : e.name);
      kids.push_back(resolve_expr(e.children[i], scope, is_global));
      scope.pop_back();
    } else {
      kids.push_back(resolve_expr(e.children[i], scope, is_global));
    }
  }
  const bool binder = e.kind == TermKind::Pi || e.kind == TermKind::Sigma ||
                      e.kind == TermKind::Lambda;
  std::string hint = binder && e.name.empty() ? std::string("_") : e.name;
  return Term::make(e.kind, std::move(kids), e.span, std::move(hint));
}

CoreDecl resolve_decl(const SurfaceDecl& d, const GlobalPredicate& is_global) {
  std::vector<std::string> scope;
  if (const auto* def = std::get_if<SurfaceDefinition>(&d)) {
    Term type = resolve_expr(def->type, scope, is_global);
    Term body = resolve_expr(def->body, scope, is_global);
    return Declaration{def->name, std::move(type), std::move(body), def->span, def->name_span};
  }
  const auto& pragma = std::get<SurfacePragma>(d);
  CorePragma out{pragma.kind, {}, pragma.span};
  for (const Expr& e : pragma.payload) out.payload.push_back(resolve_expr(e, scope, is_global));
  return out;
}

std::vector<CoreDecl> resolve(const std::vector<SurfaceDecl>& decls,
                              std::vector<std::string> known_globals) {
  std::vector<CoreDecl> out;
  out.reserve(decls.size());
  auto is_global = [&](std::string_view name) {
    return std::find(known_globals.begin(), known_globals.end(), name) != known_globals.end();
  };
  for (const SurfaceDecl& d : decls) {
    out.push_back(resolve_decl(d, is_global));
    if (const auto* def = std::get_if<SurfaceDefinition>(&d)) known_globals.push_back(def->name);
  }
  return out;
}

}  // namespace tinytt
