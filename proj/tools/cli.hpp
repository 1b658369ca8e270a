#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace rdga {

// Runs one rdga command. Exit codes: 0 every check passed, 1 a check failed, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdga
