#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seaorder::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// Runs one command line (without the program name). Verdicts go to `out`;
// the exit code reports only usage (2) or domain (3) failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seaorder::cli
