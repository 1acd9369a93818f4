#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conicnet::cli {

/// Exit codes: 0 success, 1 bad input, 2 internal or mathematical
/// inconsistency.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUser = 1;
inline constexpr int kExitInternal = 2;

/// Runs the command line `args` (without the program name).  Results go to
/// `out`, structured JSON errors and the audit timing line to `err`.  Input
/// named "-" is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace conicnet::cli
