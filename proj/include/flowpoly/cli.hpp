#pragma once

#include <iosfwd>

namespace flowpoly {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_verification_failed = 2;
inline constexpr int exit_usage = 64;

/// Entry point of the flowpoly command. Writes results to out and
/// diagnostics to err; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace flowpoly
