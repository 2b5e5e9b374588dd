#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathrep::cli {

/// Parses and executes one command line (without the program name), writing
/// results to out and diagnostics to err. Returns the process exit code:
/// 0 for success, 1 for domain failures, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathrep::cli
