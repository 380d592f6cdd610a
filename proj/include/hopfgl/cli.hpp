#ifndef HOPFGL_CLI_HPP
#define HOPFGL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hopfgl
{

// Exit codes of the command-line driver.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

// Runs the driver on `args` (without the program name).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hopfgl

#endif
