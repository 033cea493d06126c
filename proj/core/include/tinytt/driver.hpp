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

#ifndef TINYTT_DRIVER_HPP
#define TINYTT_DRIVER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "tinytt/eval.hpp"
#include "tinytt/kernel.hpp"
#include "tinytt/source.hpp"

namespace tinytt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Verbosity { Quiet, Normal };

struct RunConfig {
  std::string input;
  bool type_in_type = false;
  bool enable_k = false;
  std::uint64_t fuel = kDefaultFuel;
  Verbosity verbosity = Verbosity::Normal;

  [[nodiscard]] FlagSet flags() const { return FlagSet{type_in_type, enable_k, fuel}; }
};

/// A malformed invocation, or an explicit request for help.
struct UsageError {
  std::string message;
  bool help = false;
};

/// Parses `check <file> [--type-in-type] [--enable-K] [--fuel N] [--quiet]`.
/// `args` excludes the program name.
std::variant<RunConfig, UsageError> parse_flags(const std::vector<std::string>& args);

std::string usage_text();

/// Checks `src` declaration by declaration, stopping at the first error.
/// Pragma results go to `out`, diagnostics to `err`. Returns the exit code.
int run_source(const SourceFile& src, const FlagSet& flags, Verbosity verbosity, std::ostream& out,
               std::ostream& err);

/// Reads `config.input` and runs it. Unreadable input exits with kExitUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tinytt

#endif  // TINYTT_DRIVER_HPP
