#include "bdecomp/bases.hpp"

#include "bdecomp/combinatorics.hpp"
#include "bdecomp/operators.hpp"

#include <stdexcept>

namespace bdecomp {

NodeSamples NodeSamples::of(const Polynomial& f, unsigned n)
{
    NodeSamples s{n, {}};
    for (const auto& t : uniform_knots(n)) {
        s.values.push_back(f(t));
    }
    return s;
}

std::vector<Rational> uniform_knots(unsigned n)
{
    if (n < 1) {
        throw std::invalid_argument("grid parameter n must be >= 1");
    }
    std::vector<Rational> knots;
    knots.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        knots.push_back(make_rational(i, n));
    }
    return knots;
}

Polynomial bernstein_basis_polynomial(unsigned n, unsigned i)
{
    if (i > n) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<Rational> c(n + 1);
    const Integer lead = binomial(n, i);
    for (unsigned l = 0; l <= n - i; ++l) {
        Integer v = lead * binomial(n - i, l);
        c[i + l] = (l % 2 == 0) ? Rational(v) : Rational(-v);
    }
    return Polynomial(std::move(c));
}

std::vector<Polynomial> phi_family(unsigned n)
{
    if (n < 1) {
        throw std::invalid_argument("operator degree n must be >= 1");
    }
    std::vector<Polynomial> inv_columns;
    inv_columns.reserve(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        inv_columns.push_back(beta_inverse_image(n, j));
    }
    std::vector<Polynomial> family;
    family.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        const Polynomial b = bernstein_basis_polynomial(n, i);
        Polynomial phi;
        const auto c = b.coefficients();
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (sgn(c[j]) != 0) {
                phi += c[j] * inv_columns[j];
            }
        }
        family.push_back(std::move(phi));
    }
    return family;
}

Polynomial phi_basis(unsigned n, unsigned i)
{
    if (i > n) {
        throw std::invalid_argument("basis index out of range");
    }
    return apply_beta_inverse(n, bernstein_basis_polynomial(n, i));
}

Polynomial rho_basis(unsigned n, unsigned j)
{
    if (n < 1 || j > n) {
        throw std::invalid_argument("basis index out of range");
    }
    // 1 / ((n-j)! n^{2j-1}); the j = 0 case has n^{-1} in the denominator.
    Integer n_pow;
    Integer num = 1;
    if (j == 0) {
        n_pow = 1;
        num = n;
    } else {
        mpz_ui_pow_ui(n_pow.get_mpz_t(), n, 2 * j - 1);
    }
    const Integer den = factorial(n - j) * n_pow;
    std::vector<Rational> c(j + 1);
    for (unsigned k = 0; k <= j; ++k) {
        Integer v = factorial(n + k - 1) * stirling_second(j, k) * num;
        if ((j - k) % 2 == 1) {
            v = -v;
        }
        c[k] = make_rational(v, den);
    }
    return Polynomial(std::move(c));
}

Polynomial apply_to_samples(SampleBasis basis, const NodeSamples& samples)
{
    if (samples.values.size() != static_cast<std::size_t>(samples.n) + 1) {
        throw std::invalid_argument("sample count does not match n + 1");
    }
    const unsigned n = samples.n;
    Polynomial acc;
    if (basis == SampleBasis::Phi) {
        const auto family = phi_family(n);
        for (unsigned i = 0; i <= n; ++i) {
            if (sgn(samples.values[i]) != 0) {
                acc += samples.values[i] * family[i];
            }
        }
        return acc;
    }
    for (unsigned i = 0; i <= n; ++i) {
        if (sgn(samples.values[i]) != 0) {
            acc += samples.values[i] * bernstein_basis_polynomial(n, i);
        }
    }
    return acc;
}

Polynomial apply_f_by_divided_differences(const NodeSamples& samples)
{
    if (samples.values.size() != static_cast<std::size_t>(samples.n) + 1) {
        throw std::invalid_argument("sample count does not match n + 1");
    }
    const unsigned n = samples.n;
    const auto knots = uniform_knots(n);
    Polynomial acc;
    for (unsigned j = 0; j <= n; ++j) {
        const Rational dd = divided_difference(std::span(knots).first(j + 1), std::span(samples.values).first(j + 1));
        if (sgn(dd) != 0) {
            acc += dd * rho_basis(n, j);
        }
    }
    return acc;
}

Polynomial central_moment(unsigned n, unsigned m)
{
    // (-x)^{m-j} for j = m, m-1, ..., 0
    Polynomial acc;
    for (unsigned j = 0; j <= m; ++j) {
        Rational c(binomial(m, j));
        if ((m - j) % 2 == 1) {
            c = -c;
        }
        acc += Polynomial::monomial(m - j, c) * f_image(n, j);
    }
    return acc;
}

std::vector<Rational> to_bernstein_coefficients(const Polynomial& p, unsigned n)
{
    const auto a = padded_coefficients(p, n + 1);
    std::vector<Rational> beta(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        for (unsigned k = 0; k <= j; ++k) {
            if (sgn(a[k]) != 0) {
                beta[j] += a[k] * make_rational(binomial(j, k), binomial(n, k));
            }
        }
    }
    return beta;
}

Polynomial from_bernstein_coefficients(const std::vector<Rational>& coeffs)
{
    if (coeffs.empty()) {
        return {};
    }
    const auto n = static_cast<unsigned>(coeffs.size() - 1);
    Polynomial acc;
    for (unsigned i = 0; i <= n; ++i) {
        if (sgn(coeffs[i]) != 0) {
            acc += coeffs[i] * bernstein_basis_polynomial(n, i);
        }
    }
    return acc;
}

} // namespace bdecomp
