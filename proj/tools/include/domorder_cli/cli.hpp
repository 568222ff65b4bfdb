#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domorder::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_resource = 3;

/// Runs one command line. args[0] is the program name. Results go to `out`, diagnostics to `err`.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace domorder::cli
