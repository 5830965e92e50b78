#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace szegolab::cli {

enum class Command { table1, table2, scan, classify, hessdet, qcheck, trace_compare };
enum class Format { markdown, csv };

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kAccuracy = 3,
  kGoldenMismatch = 4,
};

struct RunConfig {
  Command command = Command::table1;
  /// Raw parameter values keyed by flag name without dashes ("r", "alpha", ...).
  std::map<std::string, std::string> params;
  std::optional<std::string> output;
  Format format = Format::markdown;
};

Command parse_command(const std::string& name);
std::string command_name(Command command);

/// Runs one command and writes the report to `out`. Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (flags, optional --config file) and runs. Returns the exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace szegolab::cli
