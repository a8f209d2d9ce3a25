#pragma once

#include <iosfwd>

namespace spinproj::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one CLI invocation. Output goes to `out` only on success or on a
/// completed verification; errors go to `err` with nothing written to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinproj::cli
