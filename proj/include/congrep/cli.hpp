#pragma once

#include <iosfwd>

namespace congrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

inline constexpr int kMaxGenus = 6;
inline constexpr int kMaxN = 8;
inline constexpr unsigned kMaxP = 7;

/// Entry point of the command-line tool. Writes results to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace congrep::cli
