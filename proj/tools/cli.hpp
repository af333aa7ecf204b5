#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lorcal::cli {

/// Runs one command line (without the program name). Returns the process exit
/// code: 0 success, 1 verification failure, 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorcal::cli
