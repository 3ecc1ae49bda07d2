#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksplit::cli {

// args excludes the program name. Exit codes: 0 success, 1 verification or
// construction failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ksplit::cli
