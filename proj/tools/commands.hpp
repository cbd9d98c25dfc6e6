#pragma once

#include <ostream>

namespace eur::cli {

// Runs the eur_cli command line. Output goes to `out` unless --out is given;
// diagnostics and summaries go to `err`. Returns the process exit code:
// 0 ok, 1 bad input, 2 solver failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eur::cli
