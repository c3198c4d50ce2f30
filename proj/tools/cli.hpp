#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gauss::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kUnrealizable = 1;
inline constexpr int kInputError = 2;
inline constexpr int kCounterexample = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gauss::cli
