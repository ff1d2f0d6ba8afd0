#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptrust::cli {

// Runs the ptrust command line against explicit streams so tests can drive
// it in-process. args excludes the program name. Exit status: 0 success,
// 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptrust::cli
