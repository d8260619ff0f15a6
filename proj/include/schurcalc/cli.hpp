#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurcalc {

// Runs one CLI invocation (args exclude the program name). Returns the
// process exit code: 0 success, 1 usage or input error, 2 when a verify
// suite reports counterexamples.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace schurcalc
