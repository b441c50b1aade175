#pragma once

#include <ostream>

namespace sep::cli {

enum ExitCode : int {
    ok = 0,
    io_or_parse = 1,
    precondition = 2,
    mismatch = 3,
    bound = 4,
};

/// Entry point of the sepoly tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sep::cli
