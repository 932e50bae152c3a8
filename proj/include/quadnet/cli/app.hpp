#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadnet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitMath = 3;
inline constexpr int kExitUndecided = 4;

const char* version_string();

/// Runs the command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadnet
