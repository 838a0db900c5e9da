#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace allz::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMethodFailure = 1;  // no factor found, or a verification mismatch
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitIoError = 3;        // also internal errors

struct Options {
    bool color = false;  // ANSI markers on verify-paper lines
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Options options = {});

}  // namespace allz::cli
