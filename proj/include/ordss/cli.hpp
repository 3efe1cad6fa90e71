#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordss {

// Runs one CLI invocation (args exclude the program name). Returns the exit
// status: 0 success, 1 validation or input failure, 2 usage error. Normal
// output goes to `out`, every error message to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordss
