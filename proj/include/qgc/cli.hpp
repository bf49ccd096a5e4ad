#pragma once

// Command-line front end. run() is the whole program minus process
// plumbing, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 verification failure or violated inequality,
// 2 usage or format error, 3 size guard.

#include <iosfwd>
#include <string>
#include <vector>

namespace qgc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTooLarge = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgc::cli
