#include "bdecomp/kernels.hpp"

#include <cmath>
#include <vector>

namespace bdecomp::kernels::detail {
namespace {

void bernstein_eval_scalar(const double* coeffs, std::size_t coeff_count, const double* xs, double* out, std::size_t points)
{
    std::vector<double> work(coeff_count);
    for (std::size_t p = 0; p < points; ++p) {
        const double t = xs[p];
        const double s = 1.0 - t;
        work.assign(coeffs, coeffs + coeff_count);
        for (std::size_t r = 1; r < coeff_count; ++r) {
            for (std::size_t j = 0; j + r < coeff_count; ++j) {
                // Same rounding as the vector fmadd(s, w_j, t * w_{j+1}).
                work[j] = std::fma(s, work[j], t * work[j + 1]);
            }
        }
        out[p] = coeff_count == 0 ? 0.0 : work[0];
    }
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t count)
{
    double m = 0.0;
    for (std::size_t p = 0; p < count; ++p) {
        m = std::fmax(m, std::fabs(a[p] - b[p]));
    }
    return m;
}

double weighted_sum_sq_diff_scalar(const double* a, const double* b, const double* w, std::size_t count)
{
    double sum = 0.0;
    for (std::size_t p = 0; p < count; ++p) {
        const double d = a[p] - b[p];
        sum += w[p] * d * d;
    }
    return sum;
}

void accumulate_abs_scalar(double* acc, const double* v, std::size_t count)
{
    for (std::size_t p = 0; p < count; ++p) {
        acc[p] += std::fabs(v[p]);
    }
}

} // namespace

const KernelTable& scalar_table()
{
    static const KernelTable t{bernstein_eval_scalar, max_abs_diff_scalar, weighted_sum_sq_diff_scalar, accumulate_abs_scalar};
    return t;
}

} // namespace bdecomp::kernels::detail
