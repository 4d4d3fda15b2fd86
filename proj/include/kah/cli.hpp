#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kah::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kIoFailure = 2;
inline constexpr int kInconclusive = 3;

// Runs `kahtool <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kah::cli
