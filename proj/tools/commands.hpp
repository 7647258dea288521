#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopblocks::cli {

enum ExitCode : int {
    Ok = 0,
    Internal = 1,
    InvalidInput = 2,
    Refused = 3,
    BoundExhausted = 4,
};

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace loopblocks::cli
