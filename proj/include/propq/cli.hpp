#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace propq::cli {

// Entry point behind the propq binary. args excludes the program name.
// Exit codes: 0 success, 1 input/usage error, 2 internal invariant
// violation (a theorem predicate disagreed with exact arithmetic).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace propq::cli
