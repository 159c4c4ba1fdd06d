#pragma once

// The grpinv command line. Exit codes: 0 success, 1 usage error, 2 malformed
// input file, 3 non-skew-symmetric entry, 4 budget exceeded.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace grpinv::cli {

enum ExitCode : int { ok = 0, usage = 1, malformed = 2, non_skew = 3, over_budget = 4 };

/// Runs one invocation; data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3,5,7" -> {3, 5, 7}; every value must be an odd prime below 65536.
std::vector<std::uint32_t> parse_primes(const std::string& list);

}  // namespace grpinv::cli
