#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pav::cli {

// Exit codes; every failure class is distinct so scripts can branch on them.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_unknown_class = 3;
inline constexpr int exit_k_out_of_range = 4;
inline constexpr int exit_cap_exceeded = 5;
inline constexpr int exit_mismatch = 6;
inline constexpr int exit_overflow = 7;

// Full CLI entry point (everything but argv unpacking), so tests can drive
// it in-process. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pav::cli
