#pragma once

#include <iosfwd>

namespace vmr::cli
{
    inline constexpr int kExitOk = 0;
    inline constexpr int kExitFailed = 1;
    inline constexpr int kExitInput = 2;

    /// Runs one command line. Primary output goes to out, logs to err.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}
