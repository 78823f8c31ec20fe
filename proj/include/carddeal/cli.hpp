#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace carddeal {

// Runs the command-line front end on already-split arguments (argv without
// the program name). Writes results to `out` and diagnostics to `err`.
// Exit status: 0 on success or a passing trick/check, 1 on a failing or
// infeasible result, 2 on usage errors (including pattern syntax errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace carddeal
