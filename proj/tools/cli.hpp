#pragma once

// Command-line front end: laws, demo and refine subcommands.

#include <ostream>
#include <string>
#include <vector>

namespace monadic::cli {

/// Parses `args` (without the program name), runs the command and returns
/// the exit status. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const std::vector<std::string>& demo_names();
const std::vector<std::string>& refine_names();

}  // namespace monadic::cli
