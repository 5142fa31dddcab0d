#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subauc {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitDomainFailure = 1, kExitUsage = 2 };

/// Entry point of the `subauc` tool. `args` excludes the program name.
/// Reports go to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subauc
