#pragma once

#include <ostream>

namespace ptangle {

// Exit codes: 0 success, 1 parse/validation error, 2 guard exceeded, 3 coherence failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptangle
