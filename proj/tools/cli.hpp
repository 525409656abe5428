#pragma once

#include <iosfwd>

namespace coxfsa::cli {

enum ExitCode : int {
  kOk = 0,
  kInvariantViolation = 1,
  kUsage = 2,
  kResourceCap = 3,
};

// Entry point of the coxfsa tool; main() forwards to it with the standard
// streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxfsa::cli
