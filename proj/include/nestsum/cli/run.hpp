#pragma once

#include <ostream>

namespace nestsum::cli {

// Full command-line driver: parses argv, dispatches to the library, writes
// the result to out and text-mode diagnostics to err. With --json every
// outcome (including errors) is a single-line envelope on out.
// Exit code: 0 success, 1 domain error or failed verification, 2 usage or
// syntax error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nestsum::cli
