#pragma once

#include "bdecomp/polynomial.hpp"

namespace bdecomp {

// Published closed forms instantiated at a concrete n. They are reference
// values for the exact checks and are not used by any computation.

/// F_n e_m for m <= 6 (n >= 1). Throws std::invalid_argument for m > 6.
Polynomial f_image_closed_form(unsigned n, unsigned m);

/// M_{n,m}(x) = F_n((t - x)^m; x) for m <= 6.
Polynomial moment_closed_form(unsigned n, unsigned m);

/// Displayed value of the non-positivity witness,
///   (-n^5 - 6n^4 - 3n^3 + 14n^2 + 17n + 6) / (n^4 (n+2)^5).
Rational witness_closed_form(unsigned n);

/// 1/(n+1)^2, the point at which the witness is stated.
Rational witness_point(unsigned n);

/// 1/(n+2)^2, the point at which the displayed value is attained.
Rational witness_attaining_point(unsigned n);

/// Exact F_n(e_3; 1/(n+1)^2) = -(n-2)(n^3 + 5n^2 + 4n - 2) / (n^3 (n+1)^5).
Rational witness_value_at_stated_point(unsigned n);

/// q_4^{(n)} = x(x-1)(x(x-1) + (n+1)/(5n+6)) of the Beta operator.
Polynomial beta_q4_closed_form(unsigned n);

/// p_4^{(n)} = x(x-1)(x(x-1) + (n-1)/(5n-6)) of B_n.
Polynomial bernstein_p4_closed_form(unsigned n);

/// a(n,k,k-2) = k(k-1)(k-2)/24 (6n+3k-5) / ((2k-3)n + (k-1)(k-2)), k >= 2.
Rational beta_subsubleading_closed_form(unsigned n, unsigned k);

} // namespace bdecomp
