#ifndef COMMEXT_CLI_HPP
#define COMMEXT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace commext {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitFail = 2,   // hypotheses fail / verification fails / not equivalent
    kExitReject = 3, // solver rejected under passing hypotheses, or generation failed
};

/// Entry point of the `commext` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace commext

#endif // COMMEXT_CLI_HPP
