#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace z2cb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`. Returns 0 when every verdict is PASS or
/// INDETERMINATE, 1 on any FAIL, 2 on bad flags or unreadable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2cb::cli
