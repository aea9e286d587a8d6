#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rank2::cli {

// Command dispatch for the rank2 tool. args excludes the program name.
// Exit codes: 0 success, 1 not-finite under decide --strict, 2 input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rank2::cli
