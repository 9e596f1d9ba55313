#pragma once

#include <iosfwd>

namespace cattaneo::cli {

/// 1 covers failed validation and runtime errors (e.g. an engine that did not converge).
enum ExitCode { kOk = 0, kValidationFailed = 1, kUsageError = 2 };

/// Entry point of the `cattaneo` tool. Subcommands: cf, simulate, density,
/// variance, dirichlet, validate. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace cattaneo::cli
