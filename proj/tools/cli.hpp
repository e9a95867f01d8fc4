#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spline_gauss::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kDomainError = 3;

/// Runs the command line `args` (without the program name). Knot files named
/// "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace spline_gauss::cli
