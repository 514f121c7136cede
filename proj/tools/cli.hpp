#pragma once

#include <ostream>
#include <span>
#include <string>

namespace permstat::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kParseError = 2,
    kInvalidCode = 3,
    kSizeCap = 4,
};

/// Runs one invocation; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace permstat::cli
