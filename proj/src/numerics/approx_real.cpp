#include "bdecomp/approx_real.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>

namespace bdecomp {

ApproxReal::ApproxReal(unsigned bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(value_, 1);
}

ApproxReal::ApproxReal(double value, unsigned bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_d(value_, value, MPFR_RNDN);
}

ApproxReal::ApproxReal(const Rational& value, unsigned bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

ApproxReal::ApproxReal(const ApproxReal& other)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

ApproxReal::ApproxReal(ApproxReal&& other) noexcept
{
    // Leave the moved-from object valid and small.
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

ApproxReal& ApproxReal::operator=(const ApproxReal& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

ApproxReal& ApproxReal::operator=(ApproxReal&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

ApproxReal::~ApproxReal() { mpfr_clear(value_); }

ApproxReal ApproxReal::pi(unsigned bits)
{
    ApproxReal r(bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

std::string ApproxReal::to_string(int significant) const
{
    char* buffer = nullptr;
    const int len = mpfr_asprintf(&buffer, "%.*Rg", significant, value_);
    if (len < 0 || buffer == nullptr) {
        return "nan";
    }
    std::string out(buffer, static_cast<std::size_t>(len));
    mpfr_free_str(buffer);
    return out;
}

void ApproxReal::widen_to(mpfr_prec_t bits)
{
    if (bits > mpfr_get_prec(value_)) {
        mpfr_prec_round(value_, bits, MPFR_RNDN);
    }
}

ApproxReal& ApproxReal::operator+=(const ApproxReal& rhs)
{
    widen_to(mpfr_get_prec(rhs.value_));
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

ApproxReal& ApproxReal::operator-=(const ApproxReal& rhs)
{
    widen_to(mpfr_get_prec(rhs.value_));
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

ApproxReal& ApproxReal::operator*=(const ApproxReal& rhs)
{
    widen_to(mpfr_get_prec(rhs.value_));
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

ApproxReal& ApproxReal::operator/=(const ApproxReal& rhs)
{
    widen_to(mpfr_get_prec(rhs.value_));
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

ApproxReal ApproxReal::operator-() const
{
    ApproxReal r(*this);
    mpfr_neg(r.value_, r.value_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const ApproxReal& a, const ApproxReal& b)
{
    if (mpfr_unordered_p(a.value_, b.value_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) {
        return std::partial_ordering::less;
    }
    return c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

ApproxReal abs(const ApproxReal& x)
{
    ApproxReal r(x);
    mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

ApproxReal sqrt(const ApproxReal& x)
{
    ApproxReal r(x);
    mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

ApproxReal log(const ApproxReal& x)
{
    ApproxReal r(x);
    mpfr_log(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

ApproxReal exp(const ApproxReal& x)
{
    ApproxReal r(x);
    mpfr_exp(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

ApproxReal lgamma(const ApproxReal& x)
{
    ApproxReal r(x);
    int sign = 0;
    mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
    return r;
}

ApproxReal log_beta(const ApproxReal& a, const ApproxReal& b) { return lgamma(a) + lgamma(b) - lgamma(a + b); }

} // namespace bdecomp
