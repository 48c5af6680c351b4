#pragma once

#include "bdecomp/rational.hpp"

#include <span>

namespace bdecomp {

/// Signed Stirling numbers of the first kind, s(j,i), defined through
///   y(y+1)...(y+j-1) = sum_i s(j,i) (-1)^{j-i} y^i.
/// Returns 0 for i > j. Rows are memoised; safe to call concurrently.
Integer stirling_first(unsigned j, unsigned i);

/// Stirling numbers of the second kind S(m,j); 0 for j > m.
Integer stirling_second(unsigned m, unsigned j);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// base (base+1) ... (base+count-1); 1 for count = 0.
Integer rising_factorial(unsigned base, unsigned count);

/// base (base-1) ... (base-count+1); 1 for count = 0.
Integer falling_factorial(unsigned base, unsigned count);

/// Divided difference [x_0, ..., x_j; f] by the triangular scheme.
/// Throws std::invalid_argument on length mismatch, empty input or
/// coincident knots.
Rational divided_difference(std::span<const Rational> knots, std::span<const Rational> values);

} // namespace bdecomp
