#pragma once

#include <iosfwd>

namespace chilab {

// Runs the exact identity suite (defining quadratics, quartic pairings,
// H-sequence/CF alignment, extension and subdivision laws, fold identities,
// ordering chain), printing one "ok"/"FAIL" line per check.  Returns the
// number of failures.
int run_verify(std::ostream& out);

}  // namespace chilab
