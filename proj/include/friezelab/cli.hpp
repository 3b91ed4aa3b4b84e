#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace friezelab {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on a domain error (reported as JSON on `err`) and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace friezelab
