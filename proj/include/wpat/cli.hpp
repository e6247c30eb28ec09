#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wpat {

/// Runs the command-line interface on the given arguments (program name
/// excluded). Results go to `out`, diagnostics to `err`. Exit codes:
/// 0 success / all checks passed, 1 verification failure, 2 usage error,
/// 3 precondition error (rank, genericity, range).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wpat
