#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Double-precision grid kernels. Every kernel has a portable scalar reference
// and an AVX2+FMA variant selected at runtime. bernstein_eval is bitwise
// identical across variants; the reductions agree to rounding.

namespace bdecomp::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
    /// out[p] = sum_j coeffs[j] b_{m,j}(xs[p]) with m = count - 1, by de Casteljau.
    void (*bernstein_eval)(const double* coeffs, std::size_t coeff_count, const double* xs, double* out, std::size_t points);
    /// max_p |a[p] - b[p]|.
    double (*max_abs_diff)(const double* a, const double* b, std::size_t count);
    /// sum_p w[p] (a[p] - b[p])^2.
    double (*weighted_sum_sq_diff)(const double* a, const double* b, const double* w, std::size_t count);
    /// acc[p] += |v[p]|.
    void (*accumulate_abs)(double* acc, const double* v, std::size_t count);
};

bool supported(Isa isa);
/// Best supported variant on this CPU, honouring BDECOMP_FORCE_SCALAR=1.
Isa best_isa();
/// Throws std::invalid_argument when isa is not supported.
const KernelTable& table(Isa isa);

void bernstein_eval(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out, Isa isa = best_isa());
double max_abs_diff(std::span<const double> a, std::span<const double> b, Isa isa = best_isa());
double weighted_sum_sq_diff(std::span<const double> a, std::span<const double> b, std::span<const double> w, Isa isa = best_isa());
void accumulate_abs(std::span<double> acc, std::span<const double> v, Isa isa = best_isa());

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table(); // nullptr when not compiled in
} // namespace detail

} // namespace bdecomp::kernels
