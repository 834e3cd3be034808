#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agree::cli {

// Runs the command line `args` (args[0] is the program name). Returns the
// process exit code: 0 yes/success, 1 no, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agree::cli
