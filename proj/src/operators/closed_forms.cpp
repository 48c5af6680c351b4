#include "bdecomp/closed_forms.hpp"

#include <stdexcept>

namespace bdecomp {
namespace {

// Horner in Rational for integer polynomials in n given highest power first.
Rational poly_n(const Rational& n, std::initializer_list<long> coeffs)
{
    Rational r(0);
    for (long c : coeffs) {
        r = r * n + c;
    }
    return r;
}

Polynomial x_poly() { return Polynomial::x(); }
Polynomial w_poly() { return Polynomial{Rational(0), Rational(1), Rational(-1)}; } // x(1-x)
Polynomial v_poly() { return Polynomial{Rational(1), Rational(-2)}; }              // 1-2x

} // namespace

Polynomial f_image_closed_form(unsigned n_in, unsigned m)
{
    const Rational n(n_in);
    const Rational n2 = n * n;
    const Rational a1 = n2 - 1;
    const Rational a2 = a1 * (n2 - 4);
    const Rational a3 = a2 * (n2 - 9);
    const Rational a4 = a3 * (n2 - 16);
    const Rational a5 = a4 * (n2 - 25);
    auto brace = [](std::initializer_list<Rational> lowest_first) { return Polynomial(std::vector<Rational>(lowest_first)); };
    switch (m) {
    case 0:
        return Polynomial::constant(1);
    case 1:
        return x_poly();
    case 2:
        return x_poly() * brace({Rational(1), a1}) * (1 / n2);
    case 3:
        return x_poly() * brace({2 - n2, 6 * a1, a2}) * (1 / pow(n, 4));
    case 4:
        return x_poly() *
               brace({-poly_n(n, {1, 5, -1, -6}), -a1 * poly_n(n, {4, -1, -42}), 18 * a2, a3}) * (1 / pow(n, 6));
    case 5:
        return x_poly() *
               brace({poly_n(n, {2, -10, -25, 10, 24}), -5 * a1 * poly_n(n, {1, 13, -6, -72}),
                      -5 * a2 * poly_n(n, {2, -1, -60}), 40 * a3, a4}) *
               (1 / pow(n, 8));
    case 6:
        return x_poly() *
               brace({poly_n(n, {9, 16, -95, -135, 86, 120}), a1 * poly_n(n, {22, -144, -919, 626, 3720}),
                      -15 * a2 * poly_n(n, {1, 25, -18, -360}), -5 * a3 * poly_n(n, {4, -3, -260}), 75 * a4, a5}) *
               (1 / pow(n, 10));
    default:
        throw std::invalid_argument("f_image_closed_form: m > 6");
    }
}

Polynomial moment_closed_form(unsigned n_in, unsigned m)
{
    const Rational n(n_in);
    const Polynomial w = w_poly();
    switch (m) {
    case 0:
        return Polynomial::constant(1);
    case 1:
        return {};
    case 2:
        return w * (1 / (n * n));
    case 3:
        return w * v_poly() * ((2 - n * n) / pow(n, 4));
    case 4:
        return w * (w * (3 * poly_n(n, {11, 0, -12})) + Polynomial::constant(poly_n(n, {-1, -5, 1, 6}))) *
               (1 / pow(n, 6));
    case 5:
        return w * v_poly() *
               (w * (-2 * poly_n(n, {17, 0, -160, 0, 144})) + Polynomial::constant(poly_n(n, {2, -10, -25, 10, 24}))) *
               (1 / pow(n, 8));
    case 6:
        return w *
               (w * w * (-5 * poly_n(n, {8, 0, -653, 0, 3524, 0, -2880})) +
                w * (5 * poly_n(n, {2, -15, -155, 123, 872, -108, -720})) +
                Polynomial::constant(poly_n(n, {9, 16, -95, -135, 86, 120}))) *
               (1 / pow(n, 10));
    default:
        throw std::invalid_argument("moment_closed_form: m > 6");
    }
}

Rational witness_closed_form(unsigned n_in)
{
    const Rational n(n_in);
    return poly_n(n, {-1, -6, -3, 14, 17, 6}) / (pow(n, 4) * pow(n + 2, 5));
}

Rational witness_point(unsigned n) { return 1 / pow(Rational(n + 1), 2); }

Rational witness_attaining_point(unsigned n) { return 1 / pow(Rational(n + 2), 2); }

Rational witness_value_at_stated_point(unsigned n_in)
{
    const Rational n(n_in);
    return -(n - 2) * poly_n(n, {1, 5, 4, -2}) / (pow(n, 3) * pow(n + 1, 5));
}

Polynomial beta_q4_closed_form(unsigned n)
{
    const Polynomial p2{Rational(0), Rational(-1), Rational(1)};
    return p2 * (p2 + Polynomial::constant(make_rational(n + 1, 5 * n + 6)));
}

Polynomial bernstein_p4_closed_form(unsigned n)
{
    const Polynomial p2{Rational(0), Rational(-1), Rational(1)};
    return p2 * (p2 + Polynomial::constant(make_rational(Integer(n) - 1, Integer(5 * n) - 6)));
}

Rational beta_subsubleading_closed_form(unsigned n_in, unsigned k_in)
{
    if (k_in < 2) {
        throw std::invalid_argument("beta_subsubleading_closed_form: k < 2");
    }
    const Rational n(n_in);
    const Rational k(k_in);
    return k * (k - 1) * (k - 2) / 24 * (6 * n + 3 * k - 5) / ((2 * k - 3) * n + (k - 1) * (k - 2));
}

} // namespace bdecomp
