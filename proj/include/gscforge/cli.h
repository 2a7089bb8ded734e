#pragma once

#include <iosfwd>

namespace gscforge {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitUsage = 2 };

/// Entry point of the gsc-forge tool; writes results to `out` and diagnostics to `err`.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gscforge
