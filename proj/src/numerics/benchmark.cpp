#include "bdecomp/benchmark.hpp"

#include "bdecomp/bases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bdecomp {

std::vector<BenchmarkFunction> default_benchmark_functions()
{
    return {
        {"e2", [](double x) { return x * x; }},
        {"sin", [](double x) { return std::sin(2.0 * std::numbers::pi * x); }},
        {"kink", [](double x) { return std::fabs(x - 0.5); }},
    };
}

BenchmarkImages benchmark_images(const RealFunction& f, unsigned n, std::size_t grid, kernels::Isa isa)
{
    if (grid < 2) {
        throw std::invalid_argument("benchmark: grid must be >= 2");
    }
    if (n == 0) {
        throw std::invalid_argument("benchmark: n must be >= 1");
    }
    NodeSamples samples{n, {}};
    std::vector<double> node_values;
    for (unsigned i = 0; i <= n; ++i) {
        const double v = f(static_cast<double>(i) / n);
        if (!std::isfinite(v)) {
            throw std::invalid_argument("benchmark: non-finite sample");
        }
        node_values.push_back(v);
        samples.values.emplace_back(v);
    }
    std::vector<double> f_coeffs;
    for (const Rational& c : to_bernstein_coefficients(apply_to_samples(SampleBasis::Phi, samples), n)) {
        f_coeffs.push_back(c.get_d());
    }

    BenchmarkImages out;
    out.xs.resize(grid);
    out.target.resize(grid);
    for (std::size_t p = 0; p < grid; ++p) {
        out.xs[p] = static_cast<double>(p) / static_cast<double>(grid - 1);
        out.target[p] = f(out.xs[p]);
    }
    out.f_image.resize(grid);
    out.b_image.resize(grid);
    kernels::bernstein_eval(f_coeffs, out.xs, out.f_image, isa);
    kernels::bernstein_eval(node_values, out.xs, out.b_image, isa);
    return out;
}

std::vector<BenchmarkRow> benchmark_errors(const BenchmarkFunction& f, std::span<const unsigned> n_list, std::size_t grid,
                                           kernels::Isa isa)
{
    if (grid < 2) {
        throw std::invalid_argument("benchmark: grid must be >= 2");
    }
    std::vector<double> weights(grid, 1.0 / static_cast<double>(grid - 1));
    weights.front() *= 0.5;
    weights.back() *= 0.5;
    std::vector<BenchmarkRow> rows;
    for (unsigned n : n_list) {
        const BenchmarkImages img = benchmark_images(f.f, n, grid, isa);
        BenchmarkRow row;
        row.function = f.name;
        row.n = n;
        row.sup_f = kernels::max_abs_diff(img.f_image, img.target, isa);
        row.sup_b = kernels::max_abs_diff(img.b_image, img.target, isa);
        row.l2_f = std::sqrt(kernels::weighted_sum_sq_diff(img.f_image, img.target, weights, isa));
        row.l2_b = std::sqrt(kernels::weighted_sum_sq_diff(img.b_image, img.target, weights, isa));
        rows.push_back(row);
    }
    return rows;
}

} // namespace bdecomp
