#ifndef DEBYE_CLI_HPP
#define DEBYE_CLI_HPP

#include <string>
#include <vector>

namespace debye {

/// Entry point behind the `debye` binary. Subcommands: run, probe, norms,
/// convert. Exit codes: 0 success, 1 validation error, 2 runtime abort.
int run_command(const std::vector<std::string>& args);

}  // namespace debye

#endif
