#pragma once
// cli.hpp -- the command-line front end, exposed as a function so tests
// can drive it in-process with captured streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace jtk {

// Runs the tool on the given arguments (program name excluded) and
// returns the process exit code: 0 on success, 1 when a verification
// suite reports a failing check, 2 on usage, configuration, or
// expression errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace jtk
