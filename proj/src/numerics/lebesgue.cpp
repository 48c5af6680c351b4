#include "bdecomp/lebesgue.hpp"

#include "bdecomp/bases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bdecomp {
namespace {

std::vector<double> uniform_grid(std::size_t points)
{
    std::vector<double> xs(points);
    for (std::size_t i = 0; i < points; ++i) {
        xs[i] = static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return xs;
}

} // namespace

LebesgueFunction::LebesgueFunction(unsigned n, unsigned bits) : n_(n), bits_(bits)
{
    if (n == 0) {
        throw std::invalid_argument("lebesgue: n must be >= 1");
    }
    for (const Polynomial& phi : phi_family(n)) {
        std::vector<ApproxReal> coeffs;
        for (const Rational& c : phi.coefficients()) {
            coeffs.emplace_back(c, bits);
        }
        monomial_.push_back(std::move(coeffs));
        std::vector<double> bern;
        for (const Rational& c : to_bernstein_coefficients(phi, n)) {
            bern.push_back(c.get_d());
        }
        bernstein_.push_back(std::move(bern));
    }
}

ApproxReal LebesgueFunction::operator()(const ApproxReal& x) const
{
    if (x < ApproxReal(0.0, bits_) || x > ApproxReal(1.0, bits_)) {
        throw std::invalid_argument("lebesgue: x outside [0,1]");
    }
    ApproxReal sum(bits_);
    ApproxReal value(bits_);
    for (const auto& coeffs : monomial_) {
        mpfr_set_zero(value.raw(), 1);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            mpfr_fma(value.raw(), value.raw(), x.raw(), it->raw(), MPFR_RNDN);
        }
        mpfr_abs(value.raw(), value.raw(), MPFR_RNDN);
        sum += value;
    }
    return sum;
}

std::vector<double> LebesgueFunction::evaluate_double(std::span<const double> xs, kernels::Isa isa) const
{
    std::vector<double> sum(xs.size(), 0.0);
    std::vector<double> values(xs.size());
    for (const auto& coeffs : bernstein_) {
        kernels::bernstein_eval(coeffs, xs, values, isa);
        kernels::accumulate_abs(sum, values, isa);
    }
    return sum;
}

double LebesgueFunction::max_bernstein_coefficient() const
{
    double m = 0.0;
    for (const auto& row : bernstein_) {
        for (double c : row) {
            m = std::max(m, std::fabs(c));
        }
    }
    return m;
}

ApproxReal lebesgue_function(unsigned n, const ApproxReal& x) { return LebesgueFunction(n, std::max(x.bits(), ApproxReal::default_bits))(x); }

LebesgueMax lebesgue_max(unsigned n, const LebesgueProtocol& protocol)
{
    if (protocol.scan_points < 3) {
        throw std::invalid_argument("lebesgue_max: need at least 3 scan points");
    }
    const LebesgueFunction psi(n, protocol.bits);
    const std::vector<double> xs = uniform_grid(protocol.scan_points);
    std::vector<ApproxReal> values;
    values.reserve(xs.size());
    for (double x : xs) {
        values.push_back(psi(x));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (values[i] > values[best]) {
            best = i;
        }
    }
    LebesgueMax result{n, ApproxReal(xs[best], protocol.bits), values[best]};

    std::vector<std::size_t> peaks;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        if (values[i] >= values[i - 1] && values[i] >= values[i + 1]) {
            peaks.push_back(i);
        }
    }
    std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) {
        return values[a] > values[b] || (values[a] == values[b] && a < b);
    });
    if (peaks.size() > protocol.candidates) {
        peaks.resize(protocol.candidates);
    }

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t peak : peaks) {
        double lo = xs[peak - 1];
        double hi = xs[peak + 1];
        double c = hi - inv_phi * (hi - lo);
        double d = lo + inv_phi * (hi - lo);
        ApproxReal fc = psi(c);
        ApproxReal fd = psi(d);
        while (hi - lo > protocol.x_tolerance) {
            if (fc > fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - inv_phi * (hi - lo);
                fc = psi(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + inv_phi * (hi - lo);
                fd = psi(d);
            }
        }
        const double x = fc > fd ? c : d;
        const ApproxReal& v = fc > fd ? fc : fd;
        if (v > result.max) {
            result.argmax = ApproxReal(x, protocol.bits);
            result.max = v;
        }
    }
    return result;
}

std::vector<std::pair<double, ApproxReal>> lebesgue_curve(unsigned n, std::size_t grid, unsigned bits)
{
    if (grid < 2) {
        throw std::invalid_argument("lebesgue_curve: grid must be >= 2");
    }
    const LebesgueFunction psi(n, bits);
    std::vector<std::pair<double, ApproxReal>> curve;
    for (double x : uniform_grid(grid)) {
        curve.emplace_back(x, psi(x));
    }
    return curve;
}

} // namespace bdecomp
