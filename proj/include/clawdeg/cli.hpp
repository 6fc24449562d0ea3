#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clawdeg {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitGuardRail = 3,
};

/// Runs one command. The artifact goes to `out` (or the --output file);
/// failures add a single line "clawdeg:error:<kind>:<message>" to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clawdeg
