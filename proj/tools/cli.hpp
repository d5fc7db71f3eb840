#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recstat::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses and runs one subcommand. `args` excludes the program name.
/// Documents go to `out` (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recstat::cli
