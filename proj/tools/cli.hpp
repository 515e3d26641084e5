#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcsys::cli {

// Exit codes: 0 success, 2 usage error, 3 parse error, 4 precondition
// violation, 5 cap exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace vcsys::cli
