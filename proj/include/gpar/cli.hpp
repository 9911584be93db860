#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gpar::cli {

/// Runs the command line (args[0] is the program name) and returns the exit
/// code: 0 ok, 1 usage, 2 data or contract error, 3 cap refusal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpar::cli
