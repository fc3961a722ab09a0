#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdhom {

// Entry point of the command-line tool, separated from main() so tests can
// drive it in-process. `args` excludes the program name. Returns the process
// exit code: 0 success, 2 parse error, 3 budget exceeded, 4 cross-method
// disagreement, 1 other failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdhom
