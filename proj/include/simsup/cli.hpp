#ifndef SIMSUP_CLI_HPP
#define SIMSUP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace simsup {

/// Runs the command-line interface on the given arguments (without the
/// program name). Exit codes: 0 success / result exists, 2 result does
/// not exist (clean verdict), 3 not calculable, 1 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simsup

#endif  // SIMSUP_CLI_HPP
