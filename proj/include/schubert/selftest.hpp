#pragma once

#include <ostream>

namespace schubert {

// Runs the embedded golden corpus (small-rank closed-form fixtures plus
// full oracle agreement at n=3).  Prints one line per check; returns true
// iff everything passed.  inject_failure flips a sign in one fixture, as a
// negative control for the harness itself.
bool run_selftest(std::ostream& out, bool inject_failure = false);

}  // namespace schubert
