#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flexrig::cli {

/// Runs one command given argv-style arguments (without the program name),
/// writing results to `out` and diagnostics to `err`. `in` backs the `-`
/// graph source; the process stdin is used when null.
///
/// Exit codes: 0 success, 1 usage error, 2 invalid input graph or I/O
/// failure, 3 infeasible request.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream* in = nullptr);

} // namespace flexrig::cli
