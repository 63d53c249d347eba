#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace condorcet3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Regular output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace condorcet3::cli
