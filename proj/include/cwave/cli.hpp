// Command-line front end: every verification sweep behind one subcommand,
// with deterministic table/CSV/JSON output and scriptable exit codes
// (0 pass, 2 failed check, 64 usage, 70 numeric trouble).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cwave {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFail = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitNumeric = 70;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cwave
