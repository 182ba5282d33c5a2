#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsurf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;  // bad input data, or verify found a hard failure
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nsurf::cli
