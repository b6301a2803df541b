#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vrmat::cli {

/// Command-line frontend. argv follows main() conventions (argv[0] is the
/// program name). Returns the process exit code: 0 success or check
/// passed, 1 a requested check failed, 2 usage error, 3 input or domain
/// error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Overload for in-process driving: args without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vrmat::cli
