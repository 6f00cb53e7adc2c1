#pragma once

#include "hopf/gauge.hpp"

#include <cstdint>
#include <vector>

namespace hopf {

/// Roundoff-class invariants of the algebra and lattice layers: coisotropy isometry on the
/// CP1 and generic paths, d o d = 0, pure-gauge plaquettes, split reconstruction and
/// orthogonality, and the subalgebra / symmetric-pair residuals of the built-in pairs.
/// Each entry is algebraic with budget 1e-12 and a single size n.
std::vector<IdentityResidual> invariant_suite(int n, std::uint64_t seed, int samples = 10000);

}  // namespace hopf
