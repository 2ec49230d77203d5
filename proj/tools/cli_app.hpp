#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsc::cli {

enum ExitCode : int { ok = 0, parse_error = 2, domain_error = 3, assertion_failure = 4 };

/// Runs one command line (args excludes the program name). Results go to
/// `out`; failures print a single "error:<kind>: message" line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qsc::cli
