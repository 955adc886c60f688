#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matchforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitInternal = 4;

/// Runs one command line. args[0] is the program name. A file argument of
/// "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace matchforge::cli
