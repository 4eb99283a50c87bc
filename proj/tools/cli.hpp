#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyck::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`; usage text and plain-text errors go to `err`. Batch input ("-")
/// is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace dyck::cli
