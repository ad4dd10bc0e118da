#pragma once

#include <iosfwd>

namespace yfuse::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kBoundExceeded = 3,
};

/// Environment variable naming the bounds preset used when --bounds is absent.
inline constexpr const char* kBoundsEnv = "YFUSE_BOUNDS";

/// Parses the arguments and runs one command. The JSON document goes to out;
/// diagnostics and timing go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace yfuse::cli
