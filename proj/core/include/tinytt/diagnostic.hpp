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

#ifndef TINYTT_DIAGNOSTIC_HPP
#define TINYTT_DIAGNOSTIC_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "tinytt/span.hpp"

namespace tinytt {

enum class ErrorCode {
  Syntax = 1,
  UnboundName = 2,
  TypeMismatch = 10,
  CannotInfer = 11,
  NotAFunction = 12,
  NotAPairType = 13,
  ReflEndpointsDiffer = 14,
  NotAType = 15,
  DuplicateDefinition = 16,
  UniverseInconsistency = 20,
  KDisabled = 21,
  FuelExhausted = 30,
};

/// "E001", "E020", ...
std::string code_string(ErrorCode code);

enum class Severity { Error };

struct Diagnostic {
  ErrorCode code = ErrorCode::Syntax;
  Severity severity = Severity::Error;
  std::string message;
  std::string file;
  Span span;
  std::vector<std::string> notes;
};

/// FILE:LINE:COL: error[CODE]: MESSAGE, then one line per note indented by
/// two spaces. No trailing newline.
std::string render_diagnostic(const Diagnostic& d);

/// Every checking failure is reported by throwing one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, Span span, std::vector<std::string> notes = {});

  [[nodiscard]] const Diagnostic& diagnostic() const noexcept { return diag_; }
  [[nodiscard]] Diagnostic& diagnostic() noexcept { return diag_; }
  [[nodiscard]] ErrorCode code() const noexcept { return diag_.code; }

 private:
  Diagnostic diag_;
};

}  // namespace tinytt

#endif  // TINYTT_DIAGNOSTIC_HPP
