#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rlcode::cli {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a user error and 2 on an
/// internal invariant breach.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlcode::cli
