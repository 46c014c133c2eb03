#pragma once

#include <ostream>

namespace ptrec::cli {

/// Entry point of the ptrec tool.  Returns the process exit code:
/// 0 on success, 1 when a module reported an error or validation failed,
/// 2 on a command-line usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptrec::cli
