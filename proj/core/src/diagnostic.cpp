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

#include "tinytt/diagnostic.hpp"

#include <fmt/format.h>

namespace tinytt {

std::string code_string(ErrorCode code) {
  return fmt::format("E{:03d}", static_cast<int>(code));
}

std::string render_diagnostic(const Diagnostic& d) {
  std::string out = fmt::format("{}:{}:{}: error[{}]: {}", d.file, d.span.start_line,
                                d.span.start_col, code_string(d.code), d.message);
  for (const auto& note : d.notes) {
    out += "\n  ";
    out += note;
  }
  return out;
}

Error::Error(ErrorCode code, std::string message, Span span, std::vector<std::string> notes)
    : std::runtime_error(message),
      diag_{code, Severity::Error, std::move(message), {}, span, std::move(notes)} {}

}  // namespace tinytt
