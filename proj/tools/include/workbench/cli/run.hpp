#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace workbench::cli {

/// Parses and runs one command line (args excludes the program name).
/// Exit codes: 0 success or property holds, 1 property violated or
/// numerical failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace workbench::cli
