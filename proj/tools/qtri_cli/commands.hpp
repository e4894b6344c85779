#ifndef QTRI_CLI_COMMANDS_HPP
#define QTRI_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qtri::cli
{

// Exit statuses.
inline constexpr int exit_holds = 0;
inline constexpr int exit_fails = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_inapplicable = 3;

// Runs one invocation (arguments without the program name). The JSON report
// goes to `out`, the human summary and diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qtri::cli

#endif
