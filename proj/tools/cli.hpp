#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regge::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInadmissible = 2,
    kBoundaryHit = 3,
    kMaxIters = 4,
    kCriteriaFailed = 5,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace regge::cli
