#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctw {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int parse = 2;
inline constexpr int precondition = 3;
inline constexpr int resource = 4;
inline constexpr int verification = 5;
}  // namespace exit_code

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` as JSON, diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctw
