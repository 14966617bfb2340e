// SPDX-License-Identifier: MIT
// Command-line front end. `run` is the whole program minus process plumbing,
// so tests can drive it in-process.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leja::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

/// args excludes the program name. Reports go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leja::cli
