#pragma once

// Command-line front end. Arguments are parsed into a RunConfig, which has a
// lossless text form, and then executed.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace riders {

struct RunConfig {
  std::string command;              // count, fit, types, mobius, bounds, verify
  std::string piece = "queen";      // preset name, or a label for custom moves
  std::optional<std::string> moves; // "c,d;..." overrides the preset
  std::string board = "square";
  int q = 2;
  std::int64_t n_from = 1;
  std::int64_t n_to = 10;
  std::optional<std::int64_t> census_from;  // types: census range, default n range
  std::optional<std::int64_t> census_to;
  std::optional<int> period;        // fit: skip detection
  int p_max = 12;
  std::string method = "brute";     // brute | reconstruction
  std::string format = "json";      // json | csv | pretty
  bool labelled = false;
  bool observe_period = false;      // bounds: fit counts over the n range
  double budget = 1e10;             // enumeration work budget
  double denominator_budget = 1e7;
  double lcmd_budget = 1e6;
  unsigned threads = 0;
  std::string suite = "reference";
  bool stretch = false;
  std::vector<int> only;            // verify: criterion subset

  /// One "key=value" line per field, in a fixed order.
  std::string to_text() const;
  /// Inverse of to_text. Unknown keys are an error.
  static RunConfig from_text(const std::string& text);
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Exit codes.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kCapacity = 3 };

/// Runs one subcommand and writes its report to `out`. Throws on error.
/// Returns kFailure when a verification fails.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full front end: parses argv, executes, maps exceptions to exit codes.
/// With --json-errors, errors are written to `out` as
/// {"error": {"exit_code", "kind", "message", "n"}}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace riders
