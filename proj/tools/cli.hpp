#pragma once

#include <iosfwd>

namespace hopf::cli {

/// Exit codes: 0 success, 1 failed check, 2 bad input (snapshot, config, arguments),
/// 3 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
