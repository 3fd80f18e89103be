#ifndef NK_TOOLS_CLI_HPP
#define NK_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// Runs one subcommand. args excludes the program name. Data goes to out,
// usage text and logs to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nk::cli

#endif  // NK_TOOLS_CLI_HPP
