#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mskw {

/// Runs one `mskw` invocation. `args` excludes the program name. Exit codes:
/// 0 success, 1 usage/input/budget error, 2 counterexample or rejected certificate.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mskw
