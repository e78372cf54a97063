#ifndef ROOTWIND_CLI_HPP
#define ROOTWIND_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rootwind {

// Command-line driver. args excludes the program name. Returns the process
// exit status: 0 success, 1 usage/parse error, 2 domain error (the error
// document goes to out, diagnostics to err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rootwind

#endif
