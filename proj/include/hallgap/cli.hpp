#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hallgap {

// Runs one command given by args (program name excluded). Reports go to out,
// diagnostics and runtime statistics to err. Returns the process exit code:
//   0  success (and, where a verdict exists, the verdict is positive)
//   1  well-formed run with a negative verdict: a non-Hall entry under
//      verify, a failed gap/zone check, or an unfactorable abc core
//   2  usage errors, malformed input, or invalid configuration
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hallgap
