#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqk {

/// Exit codes: 0 ok, 1 input error, 2 verification failure, 3 internal
/// consistency failure. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqk
