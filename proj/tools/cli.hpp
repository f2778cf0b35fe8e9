#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sg::cli {

enum Exit { ok = 0, undefined = 1, input_error = 2 };

/// Runs the command line `args` (program name first). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sg::cli
