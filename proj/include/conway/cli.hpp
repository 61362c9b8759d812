#pragma once

#include <iosfwd>

namespace conway::cli {

/// Full command dispatch. Exit status: 0 success / verified, 1 verification
/// failures, 2 usage error, 3 domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conway::cli
