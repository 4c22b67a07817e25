#pragma once

#include <iosfwd>

namespace wracah::cli {

/// Exit status: 0 success, 1 verification failure, 2 invalid parameters, 3 I/O error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wracah::cli
