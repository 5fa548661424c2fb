#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadnorm {

/// Dispatch one CLI invocation. Subcommands: sn, char-poly, star, disc,
/// norm-quad, norm-hom, glue-norm, verify. Result JSON goes to `out`,
/// human diagnostics to `err`. Exit codes: 0 success, 1 law failure under
/// verify, 2 malformed input (a machine-readable error JSON is printed).
int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quadnorm
