#pragma once

#include <string>
#include <vector>

namespace cocycle::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kValidation = 2,
    kBadArgs = 64,
    kFileNotFound = 66,
};

struct Result {
    int exit_code = kOk;
    std::string out;  // empty when --output wrote to a file
    std::string err;
};

/// Runs one command line (program name excluded), e.g.
/// {"solve", "--group", "builtin:q8", "--equation", "dalembert"}.
/// The default seed is 42 unless COCYCLE_SEED is set; --seed wins over both.
Result run(const std::vector<std::string>& args);

}  // namespace cocycle::cli
