#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpart {

// Exit codes shared by every subcommand.
inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_cap = 3;

// Runs one command line (without the program name). Regular output goes to
// `out`, diagnostics to `err`.
auto run_cli(std::vector<std::string> args, std::ostream & out, std::ostream & err) -> int;

}
