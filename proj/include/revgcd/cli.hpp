#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revgcd::cli {

// Process exit codes.
enum ExitCode : int {
    kOk = 0,          // success / verified / accepted
    kRejected = 1,    // rejection, counterexample, mismatch
    kUsage = 2,       // bad arguments or unmet preconditions
    kExhausted = 3,   // search cap or time budget reached without an answer
};

// Runs one invocation. `args` excludes the program name. Data goes to `out`,
// diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace revgcd::cli
