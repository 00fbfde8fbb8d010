#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galcurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Runs the command line. args excludes the program name. Returns 0 on
/// success, 1 on usage errors and 2 on numerical or validation failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galcurve::cli
