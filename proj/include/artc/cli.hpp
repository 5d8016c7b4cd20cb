#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace artc {

// Runs one CLI invocation; `args` excludes the program name. Returns the
// process exit code (0 ok, 1 parse, 2 hypothesis, 3 resource, 4 oracle
// instability, 5 verification failure).
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace artc
