#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a violation was
// found, 2 usage or hypothesis error.

#include <iosfwd>

namespace gradind {

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gradind
