#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reebsym {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on a domain error and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reebsym
