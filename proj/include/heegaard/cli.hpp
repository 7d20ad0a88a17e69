#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heegaard::cli {

// Exit codes: 0 success, 1 usage or validation error, 2 a checked invariant
// failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heegaard::cli
