#pragma once

// The `abelian` command-line front end, callable in-process for tests.
//
// Exit codes: 0 success, 2 usage or parse error (including unknown function
// or suite names), 3 a library error such as an exceeded bound, 4 a
// verification mismatch.

#include <ostream>
#include <string>
#include <vector>

namespace abelian {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitModule = 3;
inline constexpr int kExitMismatch = 4;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelian
