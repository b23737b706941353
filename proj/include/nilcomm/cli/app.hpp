#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilcomm::cli {

// Entry point of the nilcomm tool; `args` excludes the program name. Returns the
// process exit code (see ExitCode).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcomm::cli
