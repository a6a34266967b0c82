#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ebchan::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,        // bad flags, unreadable or malformed input
    kNotPhysical = 2,  // channel not CP, or an output that is not a state
    kUnwritable = 3,   // output path cannot be written
};

/// Runs the command line `ebchan <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ebchan::cli
