#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schreier::cli {

// Stable exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kGuard = 3;

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schreier::cli
