#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqc::cli
