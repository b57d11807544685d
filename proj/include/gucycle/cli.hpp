#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gucycle {

/// Exit codes: 0 success, 1 failed verification/search or domain error,
/// 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. `in` backs the "-" input path.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace gucycle
