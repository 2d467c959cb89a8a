#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morsekit::cli {

/// Runs the morsekit command line on args (program name excluded) and returns
/// the exit status: 0 on success, 1 for failures raised while running a
/// command, 2 for usage errors. Failures are reported on err as a single line
/// "error: <kind>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morsekit::cli
