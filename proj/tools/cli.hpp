#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pullback::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // not a parking function, method mismatch, verification disagreement
  kUsage = 2,     // malformed input or refused computation
};

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a parameter range such as "3", "1..5", "n", "n-1" or "0..n-1",
/// where n is `n_value`. Returns every integer in the range (possibly none).
std::vector<int> expand_range(const std::string& text, int n_value);

}  // namespace pullback::cli
