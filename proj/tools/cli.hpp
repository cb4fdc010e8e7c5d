#ifndef CHOW0_CLI_HPP
#define CHOW0_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace chow0::cli {

// Exit codes: 0 success, 1 a verification check failed, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chow0::cli

#endif
