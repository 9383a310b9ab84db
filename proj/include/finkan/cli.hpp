#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace finkan {

// Runs the command-line interface on args (program name excluded), writing
// results to out and usage/parse diagnostics to err. Returns the process
// exit code: 0 success, 1 a validation or check failure (reported on out),
// 2 usage, parse or file errors (reported on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finkan
