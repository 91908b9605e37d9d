#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wreath::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kRefused = 3,
};

/// Environment variable naming the directory that `figure` writes into when
/// no --out is given.
inline constexpr const char* kOutDirEnv = "WREATH_OUT_DIR";

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreath::cli
