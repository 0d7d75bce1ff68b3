#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace su11 {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

// Runs one command; args excludes the program name. Records go to out,
// diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace su11
