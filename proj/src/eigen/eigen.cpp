#include "bdecomp/eigen.hpp"

#include "bdecomp/bases.hpp"
#include "bdecomp/combinatorics.hpp"
#include "bdecomp/errors.hpp"
#include "bdecomp/jacobi.hpp"

#include <stdexcept>

namespace bdecomp {

namespace {

Integer upow(unsigned base, unsigned e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

void require_fits(unsigned n, const Polynomial& f)
{
    if (f.degree() && *f.degree() > n) {
        throw std::invalid_argument("outside Pi_n");
    }
}

} // namespace

Rational eigenvalue(OperatorKind kind, unsigned n, unsigned k)
{
    if (n < 1) {
        throw std::invalid_argument("operator degree n must be >= 1");
    }
    if (k > n) {
        throw std::invalid_argument("eigenvalue index k must satisfy k <= n");
    }
    switch (kind) {
    case OperatorKind::Bernstein:
        return make_rational(falling_factorial(n, k), upow(n, k));
    case OperatorKind::Beta:
        return make_rational(upow(n, k), rising_factorial(n, k));
    case OperatorKind::BetaInverse:
        return 1 / eigenvalue(OperatorKind::Beta, n, k);
    case OperatorKind::F:
        // (n-1+k)!/(n-k)! = (n-k+1)(n-k+2)...(n+k-1); the k = 0 case is 1/n.
        if (k == 0) {
            return 1;
        }
        return make_rational(rising_factorial(n - k + 1, 2 * k - 1), upow(n, 2 * k - 1));
    case OperatorKind::Stancu:
        return eigenvalue(OperatorKind::Beta, n, k) * eigenvalue(OperatorKind::Bernstein, n, k);
    case OperatorKind::GenuineDurrmeyer:
        // (n-1)! n! / ((n-k)! (n+k-1)!) = [n!/(n-k)!] / [(n+k-1)!/(n-1)!]
        return make_rational(falling_factorial(n, k), rising_factorial(n, k));
    case OperatorKind::DurrmeyerInverse:
        return 1 / eigenvalue(OperatorKind::GenuineDurrmeyer, n, k);
    case OperatorKind::Composite:
        break;
    }
    throw std::invalid_argument("unknown kind");
}

Spectrum spectrum(OperatorKind kind, unsigned n)
{
    Spectrum s{kind, n, {}};
    s.values.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        s.values.push_back(eigenvalue(kind, n, k));
    }
    return s;
}

Polynomial triangular_eigenpolynomial(const RationalMatrix& block, unsigned k, const Rational& lambda)
{
    if (block.rows() < k + 1 || block.cols() < k + 1) {
        throw std::invalid_argument("block too small for the requested degree");
    }
    std::vector<Rational> c(k + 1);
    c[k] = 1;
    for (unsigned i = k; i-- > 0;) {
        Rational s = 0;
        for (unsigned j = i + 1; j <= k; ++j) {
            if (sgn(block(i, j)) != 0) {
                s += block(i, j) * c[j];
            }
        }
        const Rational d = block(i, i) - lambda;
        if (sgn(d) != 0) {
            c[i] = -s / d;
            continue;
        }
        if (k == 1 && i == 0 && sgn(s) == 0) {
            c[0] = make_rational(-1, 2);
            continue;
        }
        throw InternalError("degenerate eigenvalue");
    }
    return Polynomial(std::move(c));
}

EigenPair beta_eigenpolynomial(unsigned n, unsigned k)
{
    if (n < 1) {
        throw std::invalid_argument("operator degree n must be >= 1");
    }
    EigenPair pair{k, make_rational(upow(n, k), rising_factorial(n, k)), {}};
    if (k == 0) {
        pair.eigenpolynomial = Polynomial::constant(1);
        return pair;
    }
    if (k == 1) {
        pair.eigenpolynomial = Polynomial{make_rational(-1, 2), 1};
        return pair;
    }
    std::vector<Rational> a(k + 1);
    a[k] = 1;
    for (unsigned i = k; i-- > 0;) {
        Rational num = 0;
        for (unsigned j = i + 1; j <= k; ++j) {
            // (n+j)(n+j+1)...(n+k-1)
            Integer term = stirling_first(j, i) * rising_factorial(n + j, k - j);
            if ((j - i - 1) % 2 == 1) {
                term = -term;
            }
            num += Rational(term) * a[j];
        }
        const Integer den = rising_factorial(n + i, k - i) - upow(n, k - i);
        if (sgn(den) == 0) {
            throw InternalError("vanishing denominator in the Beta eigenpolynomial recurrence");
        }
        a[i] = num / Rational(den);
    }
    pair.eigenpolynomial = Polynomial(std::move(a));
    return pair;
}

EigenPair eigenpair(OperatorKind kind, unsigned n, unsigned k)
{
    const Rational lambda = eigenvalue(kind, n, k);
    if (k == 1 && (kind == OperatorKind::GenuineDurrmeyer || kind == OperatorKind::DurrmeyerInverse)) {
        return EigenPair{k, lambda, Polynomial::x()};
    }
    const RationalMatrix block = leading_block(kind, n, k + 1);
    return EigenPair{k, lambda, triangular_eigenpolynomial(block, k, lambda)};
}

EigenPair bernstein_eigenpolynomial(unsigned n, unsigned k) { return eigenpair(OperatorKind::Bernstein, n, k); }

Rational limit_coefficient(unsigned k, unsigned j)
{
    if (j > k) {
        return 0;
    }
    if (k == 1 && j == 0) {
        return make_rational(-1, 2);
    }
    Rational r = 1;
    for (unsigned l = 1; l <= k - j; ++l) {
        const Integer num = Integer(k + 1 - l) * (k - l);
        const Integer den = Integer(l) * (Integer(l) - 2 * k + 1);
        r *= make_rational(num, den);
    }
    return r;
}

Polynomial limit_eigenpolynomial(unsigned k)
{
    if (k == 0) {
        return Polynomial::constant(1);
    }
    if (k == 1) {
        return Polynomial{make_rational(-1, 2), 1};
    }
    const Rational scale = make_rational(factorial(k) * factorial(k - 2), factorial(2 * k - 2));
    return scale * (Polynomial{0, -1, 1} * jacobi_shifted(k - 2));
}

Polynomial limit_eigenpolynomial_from_coefficients(unsigned k)
{
    std::vector<Rational> c(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        c[j] = limit_coefficient(k, j);
    }
    return Polynomial(std::move(c));
}

std::vector<Rational> bernstein_dual_coefficients(unsigned n, const Polynomial& f)
{
    require_fits(n, f);
    // Coordinates of f in the monic eigenbasis by back substitution on the
    // unit upper triangular basis matrix; B_n f then has coordinates
    // lambda_k * mu_k, so mu_k is the coordinate of f itself.
    std::vector<Polynomial> basis;
    basis.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        basis.push_back(bernstein_eigenpolynomial(n, k).eigenpolynomial);
    }
    std::vector<Rational> rest = padded_coefficients(f, n + 1);
    std::vector<Rational> mu(n + 1);
    for (unsigned k = n + 1; k-- > 0;) {
        mu[k] = rest[k];
        if (sgn(mu[k]) == 0) {
            continue;
        }
        const auto c = basis[k].coefficients();
        for (std::size_t j = 0; j < c.size(); ++j) {
            rest[j] -= mu[k] * c[j];
        }
    }
    return mu;
}

Polynomial durrmeyer_eigenpolynomial(unsigned k)
{
    if (k == 0) {
        return Polynomial::constant(1);
    }
    if (k == 1) {
        return Polynomial::x();
    }
    return derivative(pow(Polynomial{0, 1, -1}, k - 1), k - 2);
}

Polynomial durrmeyer_jacobi_eigenpolynomial(unsigned k)
{
    if (k < 2) {
        return durrmeyer_eigenpolynomial(k);
    }
    return Polynomial{0, 1, -1} * jacobi_shifted(k - 2);
}

Rational durrmeyer_gauge_constant(unsigned k)
{
    return durrmeyer_eigenpolynomial(k).leading_coefficient() / durrmeyer_jacobi_eigenpolynomial(k).leading_coefficient();
}

Rational durrmeyer_differential_eigenvalue(unsigned k, unsigned l)
{
    if (k == 0 || l > k - 1) {
        // D^{l+1} annihilates Pi_k once l + 1 > k; for k = 0, 1 every l >= 1
        // falls in that case and l = 0 is the identity.
        return l == 0 ? Rational(1) : Rational(0);
    }
    Rational r(rising_factorial(k - l, 2 * l));
    return (l % 2 == 1) ? Rational(-r) : r;
}

Rational durrmeyer_dual_coefficient(unsigned n, unsigned k, const Polynomial& f)
{
    require_fits(n, f);
    if (k > n) {
        throw std::invalid_argument("dual index k must satisfy k <= n");
    }
    const Rational f0 = f(0);
    const Rational f1 = f(1);
    if (k == 0) {
        return f0;
    }
    if (k == 1) {
        return f1 - f0;
    }
    const Polynomial linear{f0, f1 - f0};
    const Polynomial residual = apply_bernstein(n, f) - linear;
    const Polynomial j = jacobi_shifted(k - 2);
    const Rational integral = definite_integral(residual * j, 0, 1);
    return integral / (eigenvalue(OperatorKind::GenuineDurrmeyer, n, k) * jacobi_norm(k - 2));
}

std::vector<Rational> durrmeyer_dual_coefficients(unsigned n, const Polynomial& f)
{
    std::vector<Rational> out;
    out.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        out.push_back(durrmeyer_dual_coefficient(n, k, f));
    }
    return out;
}

} // namespace bdecomp
