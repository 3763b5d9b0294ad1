#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmlab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int;

} // namespace gmlab::cli
