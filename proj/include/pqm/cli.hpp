#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pqm {

// Runs `pqm <args...>` (args exclude the program name). Exit codes: 0 success,
// 1 verification failure, 2 usage, parse or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqm
