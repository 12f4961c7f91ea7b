#pragma once

#include <ostream>

namespace sgag::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2, kIoError = 3 };

/// Entry point of the `sgag` tool with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgag::cli
