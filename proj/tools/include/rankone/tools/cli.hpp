#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankone::tools {

/// Runs one CLI invocation; args excludes the program name. Returns the exit
/// code: 0 success, 1 failed verification, 2 usage error, 3 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankone::tools
