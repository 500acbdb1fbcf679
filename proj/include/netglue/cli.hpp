#ifndef NETGLUE_CLI_HPP
#define NETGLUE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace netglue {

/// Command-line front end. Returns 0 on success, 1 when a verification-style
/// subcommand reports a negative result, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netglue

#endif
