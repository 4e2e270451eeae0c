#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace consta::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; usage errors and help go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace consta::cli
