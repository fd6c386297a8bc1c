#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridlock {

// Runs one CLI invocation. Exit codes: 0 success, 1 verification mismatch,
// 2 parse/usage error, 3 budget exhaustion, 4 other domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gridlock
