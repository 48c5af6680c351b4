#pragma once

#include "bdecomp/polynomial.hpp"

namespace bdecomp {

/// P_m^{(1,1)}(2x - 1), standard (unnormalised) Jacobi convention, built by
/// the three-term recurrence. J_0 = 1, J_1 = 2(2x - 1).
Polynomial jacobi_shifted(unsigned m);

/// h_m = int_0^1 x(1-x) J_m(x)^2 dx.
Rational jacobi_norm(unsigned m);

} // namespace bdecomp
