#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkscreen {

// Command-line entry point (args without the program name).
// Exit codes: 0 success, 2 bad input, 3 file I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace linkscreen
