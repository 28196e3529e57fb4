#ifndef TWISTDER_CLI_HPP
#define TWISTDER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace twistder {

// exit codes: 0 = all checks pass, 1 = a check failed, 2 = input error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace twistder

#endif
