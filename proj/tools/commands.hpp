#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twopro::cli {

// Runs one command line (without the program name) and writes the JSON report
// to out. Returns the process exit code: 0 ok, 1 negative verdict or error,
// 2 budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace twopro::cli
