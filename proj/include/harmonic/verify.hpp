#pragma once

#include <ostream>

namespace harmonic {

/// Runs the cross-validation battery: operator factors against the
/// defining integrals, series identities against their closed forms,
/// area bounds against quadrature of the Jacobian bounds, the class
/// hierarchy on sample maps, and the special-case parameter sweeps.
/// Prints one line per check and returns the number of failures.
int run_verification(std::ostream& os, int threads = 1);

}  // namespace harmonic
