#include "bdecomp/quadrature.hpp"

#include "bdecomp/bases.hpp"
#include "bdecomp/errors.hpp"
#include "bdecomp/operators.hpp"
#include "bdecomp/piecewise_linear.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bdecomp {
namespace {

constexpr unsigned max_depth = 15;

// (e - 1) log(v), with the convention 0 * log(0) = 0.
double power_log(double exponent_minus_one, double log_v)
{
    return exponent_minus_one == 0.0 ? 0.0 : exponent_minus_one * log_v;
}

double to_double_checked(const ApproxReal& v, const char* what)
{
    const double d = v.to_double();
    if (!std::isfinite(d)) {
        throw std::invalid_argument(std::string("beta_transform: non-finite ") + what);
    }
    return d;
}

double horner(const std::vector<double>& c, double x)
{
    double r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        r = r * x + *it;
    }
    return r;
}

std::vector<double> to_doubles(const Polynomial& p)
{
    std::vector<double> out;
    for (const Rational& c : p.coefficients()) {
        out.push_back(c.get_d());
    }
    return out;
}

} // namespace

std::vector<double> interior_knots(unsigned n)
{
    std::vector<double> knots;
    for (unsigned i = 1; i < n; ++i) {
        knots.push_back(static_cast<double>(i) / n);
    }
    return knots;
}

QuadratureResult beta_transform(const RealFunction& f, unsigned n, const ApproxReal& x_in, const ApproxReal& tol_in,
                                std::span<const double> breakpoints)
{
    const unsigned bits = std::max(x_in.bits(), tol_in.bits());
    const double x = to_double_checked(x_in, "x");
    const double tol = to_double_checked(tol_in, "tol");
    if (n == 0) {
        throw std::invalid_argument("beta_transform: n must be >= 1");
    }
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("beta_transform: x outside [0,1]");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("beta_transform: tol must be positive");
    }

    std::size_t evaluations = 0;
    auto sample = [&](double t) {
        ++evaluations;
        const double v = f(t);
        if (!std::isfinite(v)) {
            throw QuadratureError("non-finite integrand at t = " + std::to_string(t));
        }
        return v;
    };

    if (x == 0.0 || x == 1.0) {
        QuadratureResult r{ApproxReal(sample(x), bits), ApproxReal(0.0, bits), evaluations};
        return r;
    }

    const double a = n * x;
    const double b = n * (1.0 - x);
    const double log_b = log_beta(ApproxReal(a, ApproxReal::default_bits), ApproxReal(b, ApproxReal::default_bits)).to_double();

    std::vector<double> cuts{0.0};
    for (double c : breakpoints) {
        if (c > 0.0 && c < 1.0) {
            cuts.push_back(c);
        }
    }
    std::sort(cuts.begin() + 1, cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.size() == 1) {
        cuts.push_back(0.5);
    }
    cuts.push_back(1.0);

    const double rel_tol = std::max(tol * 1e-2, 1e-15);
    double value = 0.0;
    double error = 0.0;
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

    // Endpoint panels keep an algebraic endpoint factor (t^{a-1} with a >= 1,
    // or the substituted integrand's residual roughness): tanh-sinh. Interior
    // panels are smooth: Gauss-Kronrod.
    // Non-const: Boost 1.74 defines integrate() without its declared const.
    thread_local boost::math::quadrature::tanh_sinh<double> tanh_sinh;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const double lo = cuts[p];
        const double hi = cuts[p + 1];
        double panel_error = 0.0;
        double panel_value = 0.0;
        if (p == 0) {
            if (a < 1.0) {
                // u = t^a, t^{a-1} dt = du / a.
                auto g = [&](double u) {
                    const double t = std::pow(u, 1.0 / a);
                    return std::exp(power_log(b - 1.0, std::log1p(-t)) - log_b) / a * sample(t);
                };
                panel_value = tanh_sinh.integrate(g, 0.0, std::pow(hi, a), rel_tol, &panel_error);
            } else {
                auto g = [&](double t) {
                    return std::exp(power_log(a - 1.0, std::log(t)) + power_log(b - 1.0, std::log1p(-t)) - log_b) * sample(t);
                };
                panel_value = tanh_sinh.integrate(g, lo, hi, rel_tol, &panel_error);
            }
        } else if (p + 2 == cuts.size()) {
            if (b < 1.0) {
                // u = (1-t)^b, (1-t)^{b-1} dt = -du / b.
                auto g = [&](double u) {
                    const double t = 1.0 - std::pow(u, 1.0 / b);
                    return std::exp(power_log(a - 1.0, std::log(t)) - log_b) / b * sample(t);
                };
                panel_value = tanh_sinh.integrate(g, 0.0, std::pow(1.0 - lo, b), rel_tol, &panel_error);
            } else {
                auto g = [&](double t) {
                    return std::exp(power_log(a - 1.0, std::log(t)) + power_log(b - 1.0, std::log1p(-t)) - log_b) * sample(t);
                };
                panel_value = tanh_sinh.integrate(g, lo, hi, rel_tol, &panel_error);
            }
        } else {
            auto g = [&](double t) {
                return std::exp(power_log(a - 1.0, std::log(t)) + power_log(b - 1.0, std::log1p(-t)) - log_b) * sample(t);
            };
            panel_value = GK::integrate(g, lo, hi, max_depth, rel_tol, &panel_error);
        }
        value += panel_value;
        error += panel_error;
    }
    if (!std::isfinite(value) || !(error <= tol)) {
        throw QuadratureError("quadrature budget exceeded");
    }
    return QuadratureResult{ApproxReal(value, bits), ApproxReal(error, bits), evaluations};
}

ContradictionReport g2_contradiction_check(double tol)
{
    if (!(tol > 0.0) || tol > 1e-4) {
        throw std::invalid_argument("g2_contradiction_check: tol must lie in (0, 1e-4]");
    }
    ContradictionReport report;
    report.tol = tol;
    const ApproxReal quarter(Rational(1, 4), ApproxReal::default_bits);
    const ApproxReal tolerance(tol, ApproxReal::default_bits);

    const PiecewiseLinear hat = PiecewiseLinear::hat(2, 2);
    const std::vector<double> knots = interior_knots(2);
    report.quadrature_value = beta_transform([&](double t) { return hat(t); }, 2, quarter, tolerance, knots).value;

    const ApproxReal pi = ApproxReal::pi();
    const ApproxReal eight(8.0, ApproxReal::default_bits);
    const ApproxReal two(2.0, ApproxReal::default_bits);
    const ApproxReal half(0.5, ApproxReal::default_bits);
    report.closed_form = (half - pi / eight) / (pi / two);

    const double q = report.quadrature_value.to_double();
    report.distance = std::fabs(q - report.bernstein_value);
    report.matches_closed_form = abs(report.quadrature_value - report.closed_form).to_double() <= tol;
    report.contradiction = report.distance > 5e-3;

    const std::vector<double> phi = to_doubles(phi_basis(2, 2));
    report.phi_route_value =
        beta_transform([&](double t) { return horner(phi, t); }, 2, quarter, tolerance).value.to_double();
    report.phi_route_difference = std::fabs(report.phi_route_value - report.bernstein_value);
    report.phi_route_pass = report.phi_route_difference <= tol;

    bool sandwich_ok = true;
    for (unsigned n = 2; n <= 6; ++n) {
        const std::vector<double> breaks = interior_knots(n);
        for (const Rational& x : {Rational(1, 4), Rational(1, 2)}) {
            for (unsigned power : {2u, 4u}) {
                const Polynomial centred = pow(Polynomial{-x, Rational(1)}, power);
                SandwichRow row;
                row.n = n;
                row.power = power;
                row.x = x.get_d();
                row.lower = apply_beta(n, centred)(x).get_d();
                row.upper = apply_beta(n, apply_bernstein(n, centred))(x).get_d();
                const double xd = row.x;
                const PiecewiseLinear interp =
                    PiecewiseLinear::interpolate([&](const double& t) { return std::pow(t - xd, power); }, n);
                row.value = beta_transform([&](double t) { return interp(t); }, n, ApproxReal(x, ApproxReal::default_bits),
                                           tolerance, breaks)
                                .value.to_double();
                row.pass = row.lower - tol <= row.value && row.value <= row.upper + tol;
                sandwich_ok = sandwich_ok && row.pass;
                report.sandwich.push_back(row);
            }
        }
    }
    report.pass = report.matches_closed_form && report.contradiction && report.phi_route_pass && sandwich_ok;
    return report;
}

} // namespace bdecomp
