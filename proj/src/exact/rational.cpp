#include "bdecomp/rational.hpp"

#include <stdexcept>
#include <string>

namespace bdecomp {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result(1);
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    // (p/q)^e is already in lowest terms when p/q is, up to the sign carried by p.
    return result;
}

} // namespace bdecomp
