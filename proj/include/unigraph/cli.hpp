#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unigraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNegative = 2;
inline constexpr int kExitInternal = 3;

inline constexpr const char* kVersion = "1.0.0";

/// Runs one command line (without the program name). "-" in place of a
/// sequence or graph6 argument reads it from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace unigraph::cli
