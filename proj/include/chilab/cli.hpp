#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chilab/value.hpp"

namespace chilab {

// Symbolic tokens for CLI arguments: named constants ("phi", "1/phi", "chi",
// "chi_prime", "silver", "bronze", "sqrt2", "sesquitertia") or rational
// literals ("3/2", "7").  Throws std::invalid_argument otherwise.
Value parse_value_token(const std::string& token);

// Full command-line front end (args exclude the program name).
// Exit codes: 0 success, 1 runtime/verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chilab
