#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scring {

// One CLI invocation, argv-style arguments without the program name.
// Returns the process exit code: 0 when every check passes, 1 when a
// verification check fails, 2 on usage or configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scring
