#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcsreason::cli {

// Runs one subcommand. `args` excludes the program name, e.g.
// {"mcs", "monument.ofn"}. Data goes to `out` (or the --out file),
// diagnostics to `err`. Returns 0 on success, 1 on a domain error and 2 on a
// usage error.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcsreason::cli
