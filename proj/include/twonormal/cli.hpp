#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twonormal {

// Full command-line driver; args excludes the program name.  Returns the
// process exit code: 0 success, 1 operation failed, 2 usage or missing
// input, 3 tetrahedron cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace twonormal
