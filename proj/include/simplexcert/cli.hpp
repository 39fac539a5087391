#pragma once

#include <ostream>

namespace simplexcert {

// Exit statuses of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `simplexcert` tool, with injectable streams:
//   verify --max-dim N [--format json|text] [--inject P:C:D]
//   table  --from A --to B [--format csv|text]
//   trace  --dim N [--svg PATH]
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace simplexcert
