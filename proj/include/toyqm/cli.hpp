#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toyqm::cli {

/// Parses and runs one command line (without the program name).  All
/// normal output goes to `out`, diagnostics to `err`.  Returns the
/// process exit code: 0 on success, 1 on a verification or domain
/// failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace toyqm::cli
