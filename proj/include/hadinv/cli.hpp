#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hadinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one command line (without the program name):
///   gen | det | inv | pinv | verify | bench
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hadinv::cli
