#pragma once

#include "bdecomp/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>

namespace bdecomp {

/// Binary floating value with a declared precision in bits (MPFR, round to
/// nearest). Binary operations produce the larger of the operand precisions.
class ApproxReal {
public:
    static constexpr unsigned default_bits = 256;

    explicit ApproxReal(unsigned bits = default_bits);
    ApproxReal(double value, unsigned bits);
    ApproxReal(const Rational& value, unsigned bits);
    ApproxReal(const ApproxReal& other);
    ApproxReal(ApproxReal&& other) noexcept;
    ApproxReal& operator=(const ApproxReal& other);
    ApproxReal& operator=(ApproxReal&& other) noexcept;
    ~ApproxReal();

    static ApproxReal pi(unsigned bits = default_bits);

    unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }

    /// printf-style %.{significant}g rendering, e.g. "0.0683098354".
    std::string to_string(int significant = 12) const;

    ApproxReal& operator+=(const ApproxReal& rhs);
    ApproxReal& operator-=(const ApproxReal& rhs);
    ApproxReal& operator*=(const ApproxReal& rhs);
    ApproxReal& operator/=(const ApproxReal& rhs);
    ApproxReal operator-() const;

    friend ApproxReal operator+(ApproxReal a, const ApproxReal& b) { return a += b; }
    friend ApproxReal operator-(ApproxReal a, const ApproxReal& b) { return a -= b; }
    friend ApproxReal operator*(ApproxReal a, const ApproxReal& b) { return a *= b; }
    friend ApproxReal operator/(ApproxReal a, const ApproxReal& b) { return a /= b; }

    friend bool operator==(const ApproxReal& a, const ApproxReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const ApproxReal& a, const ApproxReal& b);

    mpfr_ptr raw() { return value_; }
    mpfr_srcptr raw() const { return value_; }

private:
    void widen_to(mpfr_prec_t bits);

    mpfr_t value_;
};

ApproxReal abs(const ApproxReal& x);
ApproxReal sqrt(const ApproxReal& x);
ApproxReal log(const ApproxReal& x);
ApproxReal exp(const ApproxReal& x);
/// log |Gamma(x)|.
ApproxReal lgamma(const ApproxReal& x);

/// log B(a, b) = lgamma(a) + lgamma(b) - lgamma(a + b).
ApproxReal log_beta(const ApproxReal& a, const ApproxReal& b);

} // namespace bdecomp
