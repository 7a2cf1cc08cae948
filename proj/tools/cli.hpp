#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cechkit::cli {

enum ExitCode : int {
  kSuccess = 0,     // success or affirmative decision
  kNegative = 1,    // negative decision (no common point)
  kUsage = 2,       // bad flags, unreadable or malformed input
  kDegenerate = 3,  // degenerate configuration under --strict
};

/// Runs one command line (without the program name), writing data to `out`
/// and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cechkit::cli
