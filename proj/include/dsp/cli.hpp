#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dsp {

/// Exit codes: 0 success, 1 negative or undecided answer (good, generic, special,
/// verify, deform), 2 input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_input_error = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dsp
