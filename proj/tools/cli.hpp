#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "staudt/projective.hpp"

namespace staudt::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerdictFalse = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (without the program name).  JSON goes to
/// `out` unless --output is given; summaries and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Work-stealing loop over `jobs` threads; serial_for when jobs <= 1.
ParallelFor threaded_for(unsigned jobs);

} // namespace staudt::cli
