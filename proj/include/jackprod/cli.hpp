#pragma once

#include <ostream>

namespace jackprod::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 1,
  kUsageError = 2,
  kResolutionFailure = 3,
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jackprod::cli
