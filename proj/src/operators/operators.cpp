#include "bdecomp/operators.hpp"

#include "bdecomp/combinatorics.hpp"

#include <stdexcept>

namespace bdecomp {

namespace {

void require_degree(unsigned n)
{
    if (n < 1) {
        throw std::invalid_argument("operator degree n must be >= 1");
    }
}

OperatorMatrix from_columns(unsigned n, OperatorKind kind, Polynomial (*column)(unsigned, unsigned))
{
    require_degree(n);
    OperatorMatrix op{n, kind, RationalMatrix(n + 1, n + 1)};
    for (unsigned j = 0; j <= n; ++j) {
        op.matrix.set_column(j, padded_coefficients(column(n, j), n + 1));
    }
    return op;
}

Polynomial apply_columnwise(unsigned n, const Polynomial& p, Polynomial (*column)(unsigned, unsigned))
{
    Polynomial acc;
    const auto c = p.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (sgn(c[j]) != 0) {
            acc += c[j] * column(n, static_cast<unsigned>(j));
        }
    }
    return acc;
}

} // namespace

std::string_view to_string(OperatorKind kind)
{
    switch (kind) {
    case OperatorKind::Bernstein: return "bernstein";
    case OperatorKind::Beta: return "beta";
    case OperatorKind::BetaInverse: return "beta-inv";
    case OperatorKind::F: return "F";
    case OperatorKind::Stancu: return "stancu";
    case OperatorKind::GenuineDurrmeyer: return "durrmeyer";
    case OperatorKind::DurrmeyerInverse: return "durrmeyer-inv";
    case OperatorKind::Composite: return "composite";
    }
    return "composite";
}

std::optional<OperatorKind> parse_operator_kind(std::string_view name)
{
    for (auto kind : {OperatorKind::Bernstein, OperatorKind::Beta, OperatorKind::BetaInverse, OperatorKind::F,
                      OperatorKind::Stancu, OperatorKind::GenuineDurrmeyer, OperatorKind::DurrmeyerInverse}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

Polynomial OperatorMatrix::image_of_monomial(std::size_t j) const { return Polynomial(matrix.column(j)); }

Polynomial OperatorMatrix::apply(const Polynomial& p) const
{
    const auto coeffs = padded_coefficients(p, n + 1);
    return Polynomial(matrix * std::span<const Rational>(coeffs));
}

Polynomial bernstein_image(unsigned n, unsigned m)
{
    require_degree(n);
    const unsigned top = std::min(m, n);
    std::vector<Rational> c(top + 1);
    Integer n_pow_m;
    mpz_ui_pow_ui(n_pow_m.get_mpz_t(), n, m);
    for (unsigned j = 0; j <= top; ++j) {
        // C(n,j) j! = n!/(n-j)!
        c[j] = make_rational(falling_factorial(n, j) * stirling_second(m, j), n_pow_m);
    }
    return Polynomial(std::move(c));
}

Polynomial beta_image(unsigned n, unsigned k)
{
    require_degree(n);
    // nx(nx+1)...(nx+k-1) = sum_i s(k,i)(-1)^{k-i} n^i x^i
    const Integer denom = rising_factorial(n, k);
    std::vector<Rational> c(k + 1);
    Integer n_pow = 1;
    for (unsigned i = 0; i <= k; ++i) {
        Integer v = stirling_first(k, i) * n_pow;
        if ((k - i) % 2 == 1) {
            v = -v;
        }
        c[i] = make_rational(v, denom);
        n_pow *= n;
    }
    return Polynomial(std::move(c));
}

Polynomial beta_inverse_image(unsigned n, unsigned j)
{
    require_degree(n);
    Integer n_pow_j;
    mpz_ui_pow_ui(n_pow_j.get_mpz_t(), n, j);
    std::vector<Rational> c(j + 1);
    for (unsigned k = 0; k <= j; ++k) {
        // (n-1+k)!/(n-1)! = n(n+1)...(n+k-1)
        Integer v = rising_factorial(n, k) * stirling_second(j, k);
        if ((j - k) % 2 == 1) {
            v = -v;
        }
        c[k] = make_rational(v, n_pow_j);
    }
    return Polynomial(std::move(c));
}

Polynomial f_image(unsigned n, unsigned m) { return apply_beta_inverse(n, bernstein_image(n, m)); }

Polynomial apply_bernstein(unsigned n, const Polynomial& p) { return apply_columnwise(n, p, &bernstein_image); }
Polynomial apply_beta(unsigned n, const Polynomial& p) { return apply_columnwise(n, p, &beta_image); }
Polynomial apply_beta_inverse(unsigned n, const Polynomial& p) { return apply_columnwise(n, p, &beta_inverse_image); }
Polynomial apply_f(unsigned n, const Polynomial& p) { return apply_beta_inverse(n, apply_bernstein(n, p)); }

OperatorMatrix bernstein_matrix(unsigned n) { return from_columns(n, OperatorKind::Bernstein, &bernstein_image); }
OperatorMatrix beta_matrix(unsigned n) { return from_columns(n, OperatorKind::Beta, &beta_image); }
OperatorMatrix beta_inverse_matrix(unsigned n) { return from_columns(n, OperatorKind::BetaInverse, &beta_inverse_image); }

OperatorMatrix f_matrix(unsigned n)
{
    OperatorMatrix op = compose(beta_inverse_matrix(n), bernstein_matrix(n));
    op.kind = OperatorKind::F;
    return op;
}

OperatorMatrix stancu_matrix(unsigned n)
{
    OperatorMatrix op = compose(beta_matrix(n), bernstein_matrix(n));
    op.kind = OperatorKind::Stancu;
    return op;
}

OperatorMatrix durrmeyer_matrix(unsigned n)
{
    OperatorMatrix op = compose(bernstein_matrix(n), beta_matrix(n));
    op.kind = OperatorKind::GenuineDurrmeyer;
    return op;
}

OperatorMatrix durrmeyer_inverse_matrix(unsigned n)
{
    const OperatorMatrix u = durrmeyer_matrix(n);
    return OperatorMatrix{n, OperatorKind::DurrmeyerInverse, inverse(u.matrix)};
}

OperatorMatrix operator_matrix(OperatorKind kind, unsigned n)
{
    switch (kind) {
    case OperatorKind::Bernstein: return bernstein_matrix(n);
    case OperatorKind::Beta: return beta_matrix(n);
    case OperatorKind::BetaInverse: return beta_inverse_matrix(n);
    case OperatorKind::F: return f_matrix(n);
    case OperatorKind::Stancu: return stancu_matrix(n);
    case OperatorKind::GenuineDurrmeyer: return durrmeyer_matrix(n);
    case OperatorKind::DurrmeyerInverse: return durrmeyer_inverse_matrix(n);
    case OperatorKind::Composite: break;
    }
    throw std::invalid_argument("no canonical matrix for a composite operator");
}

RationalMatrix leading_block(OperatorKind kind, unsigned n, std::size_t size)
{
    require_degree(n);
    RationalMatrix block(size, size);
    auto fill = [&](Polynomial (*column)(unsigned, unsigned)) {
        for (std::size_t j = 0; j < size; ++j) {
            block.set_column(j, padded_coefficients(column(n, static_cast<unsigned>(j)), size));
        }
    };
    switch (kind) {
    case OperatorKind::Bernstein: fill(&bernstein_image); return block;
    case OperatorKind::Beta: fill(&beta_image); return block;
    case OperatorKind::BetaInverse: fill(&beta_inverse_image); return block;
    case OperatorKind::F: fill(&f_image); return block;
    case OperatorKind::Stancu:
        return leading_block(OperatorKind::Beta, n, size) * leading_block(OperatorKind::Bernstein, n, size);
    case OperatorKind::GenuineDurrmeyer:
        return leading_block(OperatorKind::Bernstein, n, size) * leading_block(OperatorKind::Beta, n, size);
    case OperatorKind::DurrmeyerInverse:
        if (size > n + 1) {
            throw std::invalid_argument("inverse Durrmeyer operator only exists on Pi_n");
        }
        return inverse(leading_block(OperatorKind::GenuineDurrmeyer, n, size));
    case OperatorKind::Composite: break;
    }
    throw std::invalid_argument("no canonical block for a composite operator");
}

OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b)
{
    if (a.n != b.n) {
        throw std::invalid_argument("compose: operators act on different spaces");
    }
    return OperatorMatrix{a.n, OperatorKind::Composite, a.matrix * b.matrix};
}

Polynomial durrmeyer_differential(unsigned l, const Polynomial& p)
{
    if (l == 0) {
        return p;
    }
    // x^l (1-x)^l
    const Polynomial weight = pow(Polynomial{0, 1, -1}, l);
    return derivative(weight * derivative(p, l + 1), l - 1);
}

Polynomial durrmeyer_inverse_differential(unsigned n, const Polynomial& p)
{
    require_degree(n);
    if (p.degree() && *p.degree() > n) {
        throw std::invalid_argument("outside Pi_n");
    }
    const Integer n1_fact = factorial(n - 1);
    Polynomial acc;
    for (unsigned l = 0; l < n; ++l) {
        const Polynomial term = durrmeyer_differential(l, p);
        if (term.is_zero()) {
            continue;
        }
        Rational c = make_rational(factorial(n - 1 - l), factorial(l) * n1_fact);
        if (l % 2 == 1) {
            c = -c;
        }
        acc += c * term;
    }
    return acc;
}

Polynomial second_moment(const OperatorMatrix& op)
{
    if (op.n < 2) {
        throw std::invalid_argument("second moment needs x^2 in the space (n >= 2)");
    }
    return op.image_of_monomial(2) - Polynomial::monomial(2);
}

} // namespace bdecomp
