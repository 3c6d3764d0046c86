#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casebcl {

// Exit codes of the command-line front end.
inline constexpr int kExitPositive = 0;  // consistent / accepted / true / satisfiable
inline constexpr int kExitNegative = 1;  // the negative answer, with a witness
inline constexpr int kExitError = 2;     // malformed input, capacity overrun, usage errors

// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casebcl
