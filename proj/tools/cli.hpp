#pragma once

#include <iosfwd>

namespace skoda::cli {

enum ExitCode { Ok = 0, Usage = 1, Falsification = 2, ResourceCap = 3 };

/// Runs the skoda command line on argv; output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skoda::cli
