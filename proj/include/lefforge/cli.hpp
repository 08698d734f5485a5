#pragma once

// Command-line front end. run_cli is the whole program minus process setup so
// tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace lefforge {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitDegenerate = 4;

/// args excludes the program name. Reports go to `out` (or --output), one-line
/// error reasons to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefforge
