#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spexlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1; // a verification reported failure
inline constexpr int kExitUsage = 2;  // bad flags, bad input, infeasible size

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; with --format json every path writes one JSON value
/// to `out`, errors included.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace spexlab::cli
