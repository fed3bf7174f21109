#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affine2::tools {

/// Runs one affine2 command. args[0] is the program name. Returns the exit
/// code: 0 on success, 1 for domain errors and negative verdicts, 2 for
/// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace affine2::tools
