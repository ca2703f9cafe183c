#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bezout::cli {

// Exit codes: 0 success, 2 usage error, 3 degenerate mathematics, 1 internal failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bezout::cli
