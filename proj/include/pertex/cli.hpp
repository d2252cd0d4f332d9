#ifndef PERTEX_CLI_HPP
#define PERTEX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pertex {

// Runs the command-line front end. `args` excludes the program name.
// Returns 0 on success, 1 on usage or parse errors, 2 on an internal
// invariant violation. Results go to `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace pertex

#endif
