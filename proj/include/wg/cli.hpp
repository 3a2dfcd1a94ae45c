#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wg::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kCheckFailed = 2, kCacheCorrupt = 3 };

/// Runs the `wg` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wg::cli
