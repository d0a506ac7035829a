#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chipfire::cli {

// Runs one invocation (args excludes the program name) and returns the exit code:
// 0 success, 2 usage or parse error, 3 graph precondition, 4 domain precondition.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chipfire::cli
