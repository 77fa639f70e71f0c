#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unit_shapes::cli {

/// Exit codes: 0 success, 1 a verification report failed (or a numerical
/// search gave up), 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Reads shape
/// input from `in` when a file argument is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace unit_shapes::cli
