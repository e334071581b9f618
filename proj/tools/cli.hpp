#pragma once

#include <ostream>

namespace ellgen::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kMalformedInput = 2, kDomainError = 3 };

/// Entry point of the `ellgen` tool; results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ellgen::cli
