#pragma once

#include <iosfwd>

#include "iwartin/error.hpp"

namespace iwartin {

/// Exit status for a failure raised with `code`: 2 for malformed input, 1 for
/// an exhausted search, 3 for everything else.
int exit_code_for(Errc code) noexcept;

/// Entry point of the iwartin command-line tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iwartin
