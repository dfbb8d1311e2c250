#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liesym::cli {

// Full command dispatch. Returns the process exit code: 0 success, 1 check
// failure, 2 usage error, 3 input error. `args` excludes the program name.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace liesym::cli
