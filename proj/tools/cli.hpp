#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussfano::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInputError = 2;
inline constexpr int kLineNotOnVariety = 3;
inline constexpr int kNoCertificate = 4;
inline constexpr int kBudgetExceeded = 5;

/// Runs the command line `args` (args[0] is the program name).  Reports go
/// to `out` as JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaussfano::cli
