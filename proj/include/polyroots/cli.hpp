#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyroots {

/// Entry point of the polyroots command line. `args` excludes the program
/// name. Returns 0 on success, 2 when a method diverged but partial results
/// were printed, 1 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyroots
