#include "bdecomp/polynomial.hpp"

#include "bdecomp/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bdecomp {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(std::size_t j, const Rational& c)
{
    std::vector<Rational> coeffs(j + 1);
    coeffs[j] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

std::optional<std::size_t> Polynomial::degree() const
{
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

Rational Polynomial::coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational(0); }

Rational Polynomial::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        coeffs_[j] += rhs.coeffs_[j];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        coeffs_[j] -= rhs.coeffs_[j];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    for (auto& v : coeffs_) {
        v *= c;
    }
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& v : r.coeffs_) {
        v = -v;
    }
    return r;
}

Rational evaluate(const Polynomial& p, const Rational& x) { return p(x); }

Polynomial derivative(const Polynomial& p, std::size_t order)
{
    const auto c = p.coefficients();
    if (order == 0) {
        return p;
    }
    if (c.size() <= order) {
        return {};
    }
    std::vector<Rational> out(c.size() - order);
    for (std::size_t j = order; j < c.size(); ++j) {
        out[j - order] = c[j] * Rational(falling_factorial(static_cast<unsigned>(j), static_cast<unsigned>(order)));
    }
    return Polynomial(std::move(out));
}

Polynomial antiderivative(const Polynomial& p)
{
    const auto c = p.coefficients();
    std::vector<Rational> out(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
        out[j + 1] = c[j] / Rational(static_cast<unsigned long>(j + 1));
    }
    return Polynomial(std::move(out));
}

Rational definite_integral(const Polynomial& p, const Rational& a, const Rational& b)
{
    const Polynomial prim = antiderivative(p);
    return prim(b) - prim(a);
}

Polynomial compose(const Polynomial& p, const Polynomial& q)
{
    Polynomial acc;
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= q;
        acc += Polynomial::constant(*it);
    }
    return acc;
}

Polynomial reflect(const Polynomial& p) { return compose(p, Polynomial{1, -1}); }

Polynomial pow(const Polynomial& p, unsigned exponent)
{
    Polynomial r = Polynomial::constant(1);
    for (unsigned i = 0; i < exponent; ++i) {
        r *= p;
    }
    return r;
}

std::vector<Rational> padded_coefficients(const Polynomial& p, std::size_t size)
{
    const auto c = p.coefficients();
    if (c.size() > size) {
        throw std::invalid_argument("polynomial degree exceeds target space");
    }
    std::vector<Rational> out(size);
    std::copy(c.begin(), c.end(), out.begin());
    return out;
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    const auto c = p.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (sgn(c[j]) == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << to_string(c[j]);
        if (j == 1) {
            os << "*x";
        } else if (j > 1) {
            os << "*x^" << j;
        }
    }
    return os.str();
}

} // namespace bdecomp
