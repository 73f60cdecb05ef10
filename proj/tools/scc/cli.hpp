#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInvariantViolation = 2;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`. Returns 0, 1 on malformed input, 2 when an
/// internal identity fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scc::cli
