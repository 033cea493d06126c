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

#include "tinytt/driver.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "tinytt/diagnostic.hpp"
#include "tinytt/lexer.hpp"
#include "tinytt/parser.hpp"
#include "tinytt/pretty.hpp"
#include "tinytt/resolve.hpp"

namespace tinytt {

namespace {

struct CommandLine {
  CLI::App app{"Proof checker for a small dependent type theory", "tinytt"};
  CLI::App* check = nullptr;
  RunConfig config;
  bool quiet = false;

  CommandLine() {
    app.require_subcommand(1);
    check = app.add_subcommand("check", "Check a .tt file and run its pragmas");
    check->add_option("file", config.input, "Input file")->required();
    check->add_flag("--type-in-type", config.type_in_type, "Collapse universes (U : U)");
    check->add_flag("--enable-K", config.enable_k, "Admit the K eliminator");
    check->add_option("--fuel", config.fuel, "Reduction step budget")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
        ->default_val(kDefaultFuel);
    check->add_flag("--quiet", quiet, "Suppress pragma output");
  }
};

void report(const SourceFile& src, Error& e, std::ostream& err) {
  Diagnostic& d = e.diagnostic();
  d.file = src.name();
  err << render_diagnostic(d) << '\n';
}

void run_pragma(const CorePragma& pragma, const Signature& sig, const FlagSet& flags,
                Verbosity verbosity, std::ostream& out) {
  Fuel check_fuel(flags.fuel);
  TypeChecker tc(sig, flags, check_fuel);
  const Context ctx;
  const Term& subject = pragma.payload.front();
  try {
    if (pragma.kind == PragmaKind::Check) {
      const Term& type = pragma.payload[1];
      tc.infer_universe(ctx, type);
      tc.check(ctx, subject, tc.eval(ctx, type));
      if (verbosity == Verbosity::Normal) out << "CHECKED: " << pretty(subject) << '\n';
      return;
    }
    tc.infer(ctx, subject);
  } catch (const FuelExhausted& f) {
    throw Error(ErrorCode::FuelExhausted,
                fmt::format("fuel exhausted after {} reduction steps", f.steps()), pragma.span,
                {"while checking the pragma's subject"});
  }
  Fuel fuel(flags.fuel);
  try {
    Term nf = normalize(sig, {}, subject, fuel);
    if (verbosity == Verbosity::Normal) out << "NORMAL: " << pretty(nf) << '\n';
  } catch (const FuelExhausted& f) {
    throw Error(ErrorCode::FuelExhausted,
                fmt::format("fuel exhausted after {} reduction steps", f.steps()), pragma.span,
                {fmt::format("while normalizing '{}'", pretty_truncated(subject, {}, 60))});
  }
}

}  // namespace

std::variant<RunConfig, UsageError> parse_flags(const std::vector<std::string>& args) {
  CommandLine cli;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cli.app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return UsageError{usage_text(), true};
  } catch (const CLI::ParseError& e) {
    return UsageError{e.what(), false};
  }
  cli.config.verbosity = cli.quiet ? Verbosity::Quiet : Verbosity::Normal;
  return cli.config;
}

std::string usage_text() {
  return "usage: tinytt check <file> [--type-in-type] [--enable-K] [--fuel N] [--quiet]\n"
         "\n"
         "  --type-in-type  collapse the universe hierarchy (U : U)\n"
         "  --enable-K      admit the K eliminator (uniqueness of identity proofs)\n"
         "  --fuel N        reduction step budget per declaration, N >= 1 (default 1000000)\n"
         "  --quiet         suppress NORMAL/CHECKED output\n"
         "\n"
         "exit status: 0 success, 1 checking failure, 2 usage or I/O error\n";
}

int run_source(const SourceFile& src, const FlagSet& flags, Verbosity verbosity, std::ostream& out,
               std::ostream& err) {
  std::vector<SurfaceDecl> decls;
  try {
    decls = parse(lex(src));
  } catch (Error& e) {
    report(src, e, err);
    return kExitCheckFailed;
  }

  Signature sig;
  auto is_global = [&](std::string_view name) { return sig.contains(name); };
  for (const SurfaceDecl& sd : decls) {
    try {
      CoreDecl decl = resolve_decl(sd, is_global);
      if (auto* def = std::get_if<Declaration>(&decl)) {
        sig = check_declaration(sig, *def, flags);
      } else {
        run_pragma(std::get<CorePragma>(decl), sig, flags, verbosity, out);
      }
    } catch (Error& e) {
      out.flush();
      report(src, e, err);
      return kExitCheckFailed;
    }
  }
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(config.input, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << config.input << "'\n";
    return kExitUsage;
  }
  std::ostringstream text;
  text << in.rdbuf();
  const std::string name = std::filesystem::path(config.input).filename().string();
  return run_source(SourceFile(name, text.str()), config.flags(), config.verbosity, out, err);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_flags(args);
  if (const auto* usage = std::get_if<UsageError>(&parsed)) {
    if (usage->help) {
      out << usage->message;
      return kExitOk;
    }
    err << "error: " << usage->message << "\n" << usage_text();
    return kExitUsage;
  }
  return run(std::get<RunConfig>(parsed), out, err);
}

}  // namespace tinytt
