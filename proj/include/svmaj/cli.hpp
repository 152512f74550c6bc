#pragma once

// Command-line front end: check, search and sweep.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 a failure where the
// statement is proven, 3 I/O failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace svmaj {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnexpected = 2;
inline constexpr int kExitIo = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svmaj
