#include "bdecomp/jacobi.hpp"

namespace bdecomp {

Polynomial jacobi_shifted(unsigned m)
{
    // With alpha = beta = 1 the recurrence reduces to
    //   2k(k+2) P_k = (2k+1)(2k+2) t P_{k-1} - k(2k+2) P_{k-2},
    // evaluated at t = 2x - 1.
    const Polynomial t{-1, 2};
    Polynomial prev = Polynomial::constant(1);
    if (m == 0) {
        return prev;
    }
    Polynomial cur = Rational(2) * t;
    for (unsigned k = 2; k <= m; ++k) {
        const Rational a = make_rational(Integer(2 * k + 1) * (2 * k + 2), Integer(2 * k) * (k + 2));
        const Rational b = make_rational(Integer(k) * (2 * k + 2), Integer(2 * k) * (k + 2));
        Polynomial next = a * (t * cur) - b * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational jacobi_norm(unsigned m)
{
    const Polynomial j = jacobi_shifted(m);
    return definite_integral(Polynomial{0, 1, -1} * j * j, 0, 1);
}

} // namespace bdecomp
