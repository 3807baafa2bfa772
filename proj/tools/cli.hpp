#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lendens::cli {

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// code: 0 success, 2 input error, 3 budget exhaustion.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lendens::cli
