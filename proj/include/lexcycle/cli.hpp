#ifndef LEXCYCLE_CLI_HPP
#define LEXCYCLE_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace lexcycle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;   ///< bad arguments, bad input, precondition not met
inline constexpr int kExitMismatch = 2;  ///< a verification or self-check failed

/// Runs `lexcycle <subcommand> [flags]`; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace lexcycle::cli

#endif
