#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nonoverlap::cli {

/// Process exit codes. Nothing else is ever returned.
enum ExitCode : int {
  exit_ok = 0,        ///< success, or the checked property holds
  exit_violation = 1, ///< a property violation or formula disagreement was found
  exit_usage = 2,     ///< bad arguments, malformed input, refused workload
};

/// Runs the tool with `args` (program name excluded). `in` backs "-" inputs.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace nonoverlap::cli
