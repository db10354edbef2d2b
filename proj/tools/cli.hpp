#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace themeorder::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2 };

/// Runs one command line (without the program name). Primary output goes to
/// `out` unless --output is given; diagnostics and errors go to `err`.
/// Returns 0 on success, 1 when the input fails validation, 2 on parse or
/// usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace themeorder::cli
