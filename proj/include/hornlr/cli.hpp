#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hornlr {

/// Command-line entry point. `args` excludes the program name. Returns 0 on
/// success, 1 on a domain error (or a failed check / realization), 2 on a
/// usage error. Errors are written to `err` as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hornlr
