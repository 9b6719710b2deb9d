#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qhex {

/// Exit codes shared by every subcommand so CI can tell math failures from
/// misuse: 0 ok, 1 verification failure, 2 usage or invalid input,
/// 3 internal route disagreement, 4 resource cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitCap = 4;

/// Runs the command-line front end. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhex
