#pragma once

namespace pomine::cli {

// Entry point of the command-line tool. Returns the process exit code:
// 0 success, 1 parse or I/O failure, 2 validation failure.
int run(int argc, const char* const* argv);

} // namespace pomine::cli
