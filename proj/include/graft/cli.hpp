#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graft {

/// Run the command-line driver with the given arguments (program name
/// excluded). Results go to `out`, diagnostics to `err`.
///
/// Exit codes: 0 success, 1 usage or parse error, 2 invariant or
/// verification failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace graft
