#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equivar::cli {

/// Parse and dispatch one command line (without the program name).
/// Exit codes: 0 ok, 2 hypothesis failure, 3 parse error,
/// 4 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equivar::cli
