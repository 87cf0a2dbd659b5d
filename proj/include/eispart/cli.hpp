#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eispart::cli {

// Full command-line driver, factored out of main() so tests can call it
// in-process. `args` excludes the program name. Returns the process exit
// code: 0 on success, 1 on a domain or verification error (diagnostic on
// err), CLI11's codes for parse errors and --help.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace eispart::cli
