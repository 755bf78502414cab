#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zgap {

/// Runs the command line (without the program name) and writes the
/// serialized OutputRecord to out. Returns 0 on success, 2 on argument
/// errors (usage on err), 1 on domain/validation errors (one line on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zgap
