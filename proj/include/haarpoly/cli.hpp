#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace haarpoly {

/** Run one command-line invocation. args excludes the program name. Every
 *  subcommand prints a single JSON document (top-level "schema" field) to
 *  `out` or, with --output, to a file; diagnostics and the per-suite verify
 *  lines go to `err`.
 *
 *  Exit status: 0 success, 1 verification failure (verify subcommand only),
 *  2 usage or input error. */
int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace haarpoly
