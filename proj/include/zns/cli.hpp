#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage, 2 inadmissible input,
// 3 certificate or placement failure, 4 search-space overflow.

#include <iosfwd>
#include <string>
#include <vector>

namespace zns {

/// args excludes the program name. Data goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace zns
