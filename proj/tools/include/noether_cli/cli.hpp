#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace noether::cli {

/// Runs one command line (without the program name). Returns the process exit code:
/// 0 when no claim failed, 1 when one did, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noether::cli
