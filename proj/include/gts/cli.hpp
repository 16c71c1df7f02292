#ifndef GTS_CLI_HPP
#define GTS_CLI_HPP

#include <iosfwd>

namespace gts::cli {

/// Runs the gts command line. Exit codes: 0 success, 2 syntax/parse error,
/// 3 numeric/degenerate failure, 4 domain violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gts::cli

#endif
