#ifndef KAKEYA_CLI_HPP
#define KAKEYA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kakeya {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_invalid = 2;

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kakeya

#endif // KAKEYA_CLI_HPP
