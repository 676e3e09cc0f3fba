#ifndef FINTRIPLE_CLI_HPP
#define FINTRIPLE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fintriple {

/// Entry point of the command-line tool.  Returns 0 when every verified
/// check passed, 1 on a verified-check failure and 2 on usage or input
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fintriple

#endif
