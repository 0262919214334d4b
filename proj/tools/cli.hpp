#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riskmetrics::cli {

inline constexpr const char *kSchemaVersion = "1";

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kIoError = 3,
};

/// Runs one invocation. `args` excludes the program name. On success exactly
/// one JSON envelope goes to `out`; diagnostics go to `err` only.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace riskmetrics::cli
