#pragma once

#include "bdecomp/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace bdecomp {

/// Dense univariate polynomial over Rational in the monomial basis:
/// coefficient j multiplies x^j. Trailing zeros are always trimmed, so the
/// zero polynomial has an empty coefficient list and no degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    /// c * x^j
    static Polynomial monomial(std::size_t j, const Rational& c = 1);
    /// The identity x.
    static Polynomial x() { return monomial(1); }

    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const Rational> coefficients() const { return coeffs_; }
    /// Zero beyond the degree.
    Rational coefficient(std::size_t j) const;
    /// Zero for the zero polynomial.
    Rational leading_coefficient() const;

    /// Exact Horner evaluation.
    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Rational evaluate(const Polynomial& p, const Rational& x);

/// order-th derivative; order 0 is the identity.
Polynomial derivative(const Polynomial& p, std::size_t order = 1);

/// Antiderivative vanishing at 0.
Polynomial antiderivative(const Polynomial& p);

Rational definite_integral(const Polynomial& p, const Rational& a, const Rational& b);

/// p(q(x)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

/// x -> 1 - x.
Polynomial reflect(const Polynomial& p);

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Coefficient vector padded (or required to fit) to length size.
/// Throws std::invalid_argument if the degree does not fit.
std::vector<Rational> padded_coefficients(const Polynomial& p, std::size_t size);

/// Human readable, e.g. "-1/2 + x^2". Used by diagnostics only.
std::string to_string(const Polynomial& p);

} // namespace bdecomp
