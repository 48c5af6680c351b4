#include "bdecomp/approx_real.hpp"
#include "bdecomp/bases.hpp"
#include "bdecomp/benchmark.hpp"
#include "bdecomp/errors.hpp"
#include "bdecomp/kernels.hpp"
#include "bdecomp/lebesgue.hpp"
#include "bdecomp/operators.hpp"
#include "bdecomp/piecewise_linear.hpp"
#include "bdecomp/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <vector>

using namespace bdecomp;

namespace {

Rational q(long a, long b) { return make_rational(a, b); }

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b)
{
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

double to_double(const Rational& r) { return r.get_d(); }

} // namespace

TEST_CASE("ApproxReal arithmetic and precision")
{
    const ApproxReal third(q(1, 3), 256);
    CHECK(third.bits() == 256);
    CHECK(std::abs(third.to_double() - 1.0 / 3.0) < 1e-17);
    const ApproxReal one = third * ApproxReal(3.0, 256);
    CHECK(abs(one - ApproxReal(1.0, 256)) < ApproxReal(1e-70, 256));
    CHECK(std::abs(ApproxReal::pi(128).to_double() - std::numbers::pi) < 1e-16);
    CHECK(ApproxReal(2.0, 64) < ApproxReal(3.0, 64));
    CHECK(-ApproxReal(2.0, 64) == ApproxReal(-2.0, 64));
    // Mixed precision widens to the larger one.
    CHECK((ApproxReal(1.0, 64) + ApproxReal(1.0, 200)).bits() == 200);
    CHECK(std::abs(sqrt(ApproxReal(2.0, 256)).to_double() - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(exp(log(ApproxReal(5.0, 256))).to_double() - 5.0) < 1e-14);
    // log B(2, 3) = log(1/12)
    CHECK(std::abs(log_beta(ApproxReal(2.0, 256), ApproxReal(3.0, 256)).to_double() - std::log(1.0 / 12.0)) < 1e-14);
    CHECK(std::abs(lgamma(ApproxReal(0.5, 256)).to_double() - 0.5 * std::log(std::numbers::pi)) < 1e-14);
    CHECK(!(ApproxReal(1.0, 64) / ApproxReal(0.0, 64)).is_finite());
    CHECK(ApproxReal(0.125, 64).to_string(3) == "0.125");
}

TEST_CASE("piecewise linear interpolants")
{
    const auto hat = PiecewiseLinear::hat(4, 2);
    CHECK(hat(0.5) == 1.0);
    CHECK(hat(0.375) == doctest::Approx(0.5));
    CHECK(hat(0.25) == 0.0);
    CHECK(hat(-1.0) == 0.0);
    const auto exact = ExactPiecewiseLinear::hat(2, 2);
    CHECK(exact(q(1, 4)) == 0);
    CHECK(exact(q(3, 4)) == q(1, 2));
    CHECK(exact(Rational(1)) == 1);
    CHECK_THROWS_AS(PiecewiseLinear(3, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseLinear::hat(2, 3), std::invalid_argument);
}

TEST_CASE("kernel dispatch")
{
    CHECK(kernels::supported(kernels::Isa::Scalar));
    CHECK(kernels::supported(kernels::best_isa()));
    if (!kernels::supported(kernels::Isa::Avx2)) {
        CHECK_THROWS(kernels::table(kernels::Isa::Avx2));
    }
    std::vector<double> c{1.0, 2.0};
    std::vector<double> xs{0.5};
    std::vector<double> out(2);
    CHECK_THROWS_AS(kernels::bernstein_eval(c, xs, out, kernels::Isa::Scalar), std::invalid_argument);
}

TEST_CASE("scalar de Casteljau against exact evaluation")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-50, 50);
    for (unsigned n = 1; n <= 12; ++n) {
        std::vector<Rational> coeffs;
        std::vector<double> dcoeffs;
        for (unsigned i = 0; i <= n; ++i) {
            coeffs.push_back(q(num(rng), 8));
            dcoeffs.push_back(to_double(coeffs.back()));
        }
        const Polynomial p = from_bernstein_coefficients(coeffs);
        std::vector<double> xs;
        for (int i = 0; i <= 16; ++i) {
            xs.push_back(i / 16.0);
        }
        std::vector<double> out(xs.size());
        kernels::bernstein_eval(dcoeffs, xs, out, kernels::Isa::Scalar);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            CHECK(out[i] == doctest::Approx(to_double(p(q(static_cast<long>(i), 16)))).epsilon(1e-13).scale(1.0));
        }
    }
}

TEST_CASE("AVX2 kernels reproduce the scalar kernels")
{
    if (!kernels::supported(kernels::Isa::Avx2)) {
        MESSAGE("AVX2 not available on this host; equivalence not exercised");
        return;
    }
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> coeff(-5.0, 5.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t count = 1; count <= 40; ++count) {
        for (std::size_t points : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 64u, 67u}) {
            std::vector<double> c(count);
            std::vector<double> xs(points);
            for (auto& v : c) {
                v = coeff(rng);
            }
            for (auto& v : xs) {
                v = unit(rng);
            }
            std::vector<double> s(points);
            std::vector<double> a(points);
            kernels::bernstein_eval(c, xs, s, kernels::Isa::Scalar);
            kernels::bernstein_eval(c, xs, a, kernels::Isa::Avx2);
            CHECK(bitwise_equal(s, a));
        }
    }
    for (std::size_t count : {0u, 1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 13u, 100u, 1001u}) {
        std::vector<double> x(count);
        std::vector<double> y(count);
        std::vector<double> w(count);
        for (std::size_t i = 0; i < count; ++i) {
            x[i] = coeff(rng);
            y[i] = coeff(rng);
            w[i] = unit(rng);
        }
        CHECK(kernels::max_abs_diff(x, y, kernels::Isa::Scalar) == kernels::max_abs_diff(x, y, kernels::Isa::Avx2));
        const double ws = kernels::weighted_sum_sq_diff(x, y, w, kernels::Isa::Scalar);
        const double wa = kernels::weighted_sum_sq_diff(x, y, w, kernels::Isa::Avx2);
        CHECK(wa == doctest::Approx(ws).epsilon(1e-13));
        std::vector<double> acc_s(count, 0.25);
        std::vector<double> acc_a(count, 0.25);
        kernels::accumulate_abs(acc_s, x, kernels::Isa::Scalar);
        kernels::accumulate_abs(acc_a, x, kernels::Isa::Avx2);
        CHECK(bitwise_equal(acc_s, acc_a));
    }
}

TEST_CASE("beta transform reproduces the exact operator on polynomials")
{
    const ApproxReal tol(1e-10, 256);
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> num(-9, 9);
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned degree = 0; degree <= 8; ++degree) {
            std::vector<Rational> c;
            for (unsigned i = 0; i <= degree; ++i) {
                c.push_back(q(num(rng), 3));
            }
            const Polynomial p(c);
            // Degree above n: the Beta image is still exact via the leading block.
            const RationalMatrix block = leading_block(OperatorKind::Beta, n, degree + 1);
            const auto coeffs = padded_coefficients(p, degree + 1);
            const Polynomial image(block * std::span<const Rational>(coeffs));
            auto f = [&p](double t) {
                double r = 0.0;
                const auto cs = p.coefficients();
                for (std::size_t i = cs.size(); i-- > 0;) {
                    r = r * t + cs[i].get_d();
                }
                return r;
            };
            for (int i = 1; i <= 11; ++i) {
                const Rational x = q(i, 12);
                const QuadratureResult r = beta_transform(f, n, ApproxReal(x, 256), tol);
                CAPTURE(n);
                CAPTURE(degree);
                CAPTURE(i);
                CHECK(std::abs(r.value.to_double() - to_double(image(x))) < 1e-9);
                CHECK(r.error_estimate.to_double() <= 1e-10);
            }
        }
    }
}

TEST_CASE("beta transform of non-polynomial functions against mpmath")
{
    const ApproxReal tol(1e-10, 256);
    const ApproxReal x(0.3, 256);
    auto sine = [](double t) { return std::sin(std::numbers::pi * t); };
    CHECK(std::abs(beta_transform(sine, 3, x, tol).value.to_double() - 0.5995752898372103) < 1e-9);
    auto kink = [](double t) { return std::abs(t - 1.0 / 3.0); };
    const std::vector<double> cut{1.0 / 3.0};
    CHECK(std::abs(beta_transform(kink, 3, x, tol, cut).value.to_double() - 0.1968060902651469) < 1e-9);
}

TEST_CASE("beta transform edge cases")
{
    auto one = [](double) { return 1.0; };
    auto identity = [](double t) { return t; };
    const ApproxReal tol(1e-10, 256);
    CHECK(beta_transform(identity, 4, ApproxReal(0.0, 256), tol).value.to_double() == 0.0);
    CHECK(beta_transform(identity, 4, ApproxReal(1.0, 256), tol).value.to_double() == 1.0);
    for (double x : {0.01, 0.2, 0.5, 0.99}) {
        CHECK(std::abs(beta_transform(one, 2, ApproxReal(x, 256), tol).value.to_double() - 1.0) < 1e-10);
        CHECK(std::abs(beta_transform(identity, 7, ApproxReal(x, 256), tol).value.to_double() - x) < 1e-10);
    }
    auto e2 = [](double t) { return t * t; };
    CHECK(std::abs(beta_transform(e2, 2, ApproxReal(0.5, 256), tol).value.to_double() - 1.0 / 3.0) < 1e-10);
    CHECK_THROWS_AS(beta_transform(one, 0, ApproxReal(0.5, 256), tol), std::invalid_argument);
    CHECK_THROWS_AS(beta_transform(one, 2, ApproxReal(1.5, 256), tol), std::invalid_argument);
    CHECK_THROWS_AS(beta_transform(one, 2, ApproxReal(0.5, 256), ApproxReal(0.0, 256)), std::invalid_argument);
    auto bad = [](double t) { return t > 0.5 ? std::nan("") : 1.0; };
    CHECK_THROWS_AS(beta_transform(bad, 2, ApproxReal(0.5, 256), tol), QuadratureError);
    CHECK(interior_knots(4) == std::vector<double>{0.25, 0.5, 0.75});
    CHECK(interior_knots(1).empty());
}

TEST_CASE("G_2 differs from B_2")
{
    const ContradictionReport r = g2_contradiction_check(1e-8);
    const double closed = (0.5 - std::numbers::pi / 8) / (std::numbers::pi / 2);
    CHECK(std::abs(r.closed_form.to_double() - closed) < 1e-15);
    CHECK(std::abs(r.quadrature_value.to_double() - closed) < 1e-8);
    CHECK(r.distance > 5e-3);
    CHECK(r.contradiction);
    CHECK(std::abs(r.phi_route_value - 0.0625) < 1e-8);
    CHECK(r.phi_route_pass);
    CHECK(r.sandwich.size() == 20);
    for (const auto& row : r.sandwich) {
        CHECK(row.lower <= row.value + 1e-8);
        CHECK(row.value <= row.upper + 1e-8);
        CHECK(row.pass);
    }
    CHECK(r.pass);
    CHECK_THROWS_AS(g2_contradiction_check(1e-3), std::invalid_argument);
}

TEST_CASE("Lebesgue function")
{
    for (unsigned n = 1; n <= 12; ++n) {
        const LebesgueFunction psi(n);
        for (unsigned i = 0; i <= n; ++i) {
            const ApproxReal v = psi(ApproxReal(q(i, n), 256));
            CHECK(v >= ApproxReal(1.0, 256) - ApproxReal(1e-60, 256));
        }
        // Symmetric about 1/2.
        CHECK(std::abs(psi(0.3).to_double() - psi(0.7).to_double()) < 1e-14);
    }
    CHECK(std::abs(LebesgueFunction(5)(0.3).to_double() - 1.05910912) < 1e-12);
    CHECK(std::abs(lebesgue_function(5, ApproxReal(0.3, 256)).to_double() - 1.05910912) < 1e-12);
    // Psi_1 = (1 - x) + x.
    CHECK(std::abs(LebesgueFunction(1)(0.4).to_double() - 1.0) < 1e-15);
}

TEST_CASE("Lebesgue double route agrees with 256-bit evaluation")
{
    std::vector<double> xs;
    for (int i = 0; i <= 200; ++i) {
        xs.push_back(i / 200.0);
    }
    for (unsigned n = 1; n <= 30; ++n) {
        const LebesgueFunction psi(n);
        const double scale = std::max(1.0, psi.max_bernstein_coefficient());
        for (auto isa : {kernels::Isa::Scalar, kernels::best_isa()}) {
            const auto fast = psi.evaluate_double(xs, isa);
            for (std::size_t i = 0; i < xs.size(); i += 7) {
                CAPTURE(n);
                CAPTURE(xs[i]);
                CHECK(std::abs(fast[i] - psi(xs[i]).to_double()) < 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("Lebesgue maxima")
{
    // Independent value: exact phi basis via a rational matrix inverse and
    // a 50-digit evaluation, maximised by scan and golden section.
    const LebesgueMax m10 = lebesgue_max(10);
    CHECK(std::abs(m10.max.to_double() - 1.2258114) < 1e-6);
    const double x10 = m10.argmax.to_double();
    CHECK((std::abs(x10 - 0.0887300) < 1e-5 || std::abs(x10 - 0.9112700) < 1e-5));
    double previous = 0.0;
    for (unsigned n : {2u, 4u, 6u, 8u, 10u, 14u, 20u}) {
        const double v = lebesgue_max(n).max.to_double();
        CHECK(v >= previous - 1e-3);
        CHECK(v >= 1.0);
        previous = v;
    }
    const auto curve = lebesgue_curve(6, 11);
    REQUIRE(curve.size() == 11);
    CHECK(curve.front().first == 0.0);
    CHECK(std::abs(curve.front().second.to_double() - 1.0) < 1e-15);
}

TEST_CASE("benchmark errors")
{
    const auto functions = default_benchmark_functions();
    REQUIRE(functions.size() == 3);
    const std::vector<unsigned> ns{5, 10, 20};
    const auto rows = benchmark_errors(functions[0], ns, 1001);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        const double n = row.n;
        // B_n e_2 - e_2 = x(1-x)/n and F_n e_2 - e_2 = x(1-x)/n^2.
        CHECK(std::abs(row.sup_b - 0.25 / n) < 1e-12);
        CHECK(std::abs(row.sup_f - 0.25 / (n * n)) < 1e-12);
        CHECK(std::abs(row.sup_b - n * row.sup_f) < 1e-12);
        CHECK(std::abs(row.l2_b - n * row.l2_f) < 1e-12);
        CHECK(std::abs(row.l2_b - std::sqrt(1.0 / 30.0) / n) < 1e-5);
    }
    const auto images = benchmark_images(functions[1].f, 10, 101);
    REQUIRE(images.xs.size() == 101);
    CHECK(images.f_image.front() == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < images.xs.size(); ++i) {
        CHECK(std::abs(images.target[i] - functions[1].f(images.xs[i])) == 0.0);
    }
    for (auto isa : {kernels::Isa::Scalar, kernels::best_isa()}) {
        const auto kink = benchmark_errors(functions[2], ns, 1001, isa);
        for (const auto& row : kink) {
            CHECK(row.sup_f > 0.0);
            CHECK(row.sup_b > 0.0);
        }
    }
    CHECK_THROWS_AS(benchmark_errors(functions[0], ns, 1), std::invalid_argument);
}
