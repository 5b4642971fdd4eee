#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dioph::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;     // e.g. a tuple that does not satisfy the equation
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDisagreement = 3; // fast and naive valuations differ
inline constexpr int kExitLemmaFailure = 4;

/// Runs the tool on `args` (without the program name). Records go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dioph::cli
