#pragma once

#include "bdecomp/kernels.hpp"
#include "bdecomp/quadrature.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bdecomp {

struct BenchmarkFunction {
    std::string name;
    RealFunction f;
};

/// e2 = x^2, sin = sin(2 pi x), kink = |x - 1/2|.
std::vector<BenchmarkFunction> default_benchmark_functions();

struct BenchmarkRow {
    std::string function;
    unsigned n = 0;
    double sup_f = 0; ///< max over the grid of |F_n f - f|
    double sup_b = 0; ///< max over the grid of |B_n f - f|
    double l2_f = 0;  ///< trapezoidal discrete L2 norm of F_n f - f
    double l2_b = 0;
};

/// Both images on a uniform grid of `grid` points including the endpoints.
/// F_n f is formed exactly from the double samples f(i/n) through the phi
/// family, converted to Bernstein coefficients and evaluated by de Casteljau.
std::vector<BenchmarkRow> benchmark_errors(const BenchmarkFunction& f, std::span<const unsigned> n_list, std::size_t grid,
                                           kernels::Isa isa = kernels::best_isa());

/// Grid values of F_n f and B_n f (same construction as benchmark_errors).
struct BenchmarkImages {
    std::vector<double> xs;
    std::vector<double> target;
    std::vector<double> f_image;
    std::vector<double> b_image;
};
BenchmarkImages benchmark_images(const RealFunction& f, unsigned n, std::size_t grid, kernels::Isa isa = kernels::best_isa());

} // namespace bdecomp
