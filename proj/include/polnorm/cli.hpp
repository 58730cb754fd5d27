#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polnorm::cli {

// Exit codes: 0 success (reports exit 0 regardless of verdict), 1 parse or
// schema error, 2 unsupported feature, 3 domain too large, 4 internal
// invariant violation. Machine output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polnorm::cli
