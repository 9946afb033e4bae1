#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gromzeta {

// Parses and runs one command line (program name excluded). Returns the
// process exit status: 0 on success, 2 when the input is rejected (unknown
// command, malformed JSON, validation failure), 1 on an internal failure.
// Rejections print a single "error: ..." line on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gromzeta
