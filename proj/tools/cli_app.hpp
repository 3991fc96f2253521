#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leavitt::cli {

/// Exit codes: 0 success or empty report, 1 nonempty report (or no witness),
/// 2 usage, parse or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitReport = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leavitt::cli
