#ifndef A4LINK_CLI_HPP
#define A4LINK_CLI_HPP

#include <string>
#include <vector>

namespace a4link {

/// Entry point shared by the binary and the tests. Exit codes: 0 success,
/// 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

} // namespace a4link

#endif
