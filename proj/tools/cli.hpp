#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distft::cli {

// Dispatches the distft command line. Returns the process exit code:
// 0 on success, 1 when `verify` reports a failing check, 2 on flag or
// expression errors (message on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace distft::cli
