#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planarop::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kBadArguments = 1, kVerificationFailed = 2 };

/// Runs one command line (args excludes the program name). Results go to
/// `out`, or to the --out file, resolved against $PLANAROP_OUT_DIR when
/// relative; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planarop::cli
