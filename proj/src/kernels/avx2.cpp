#include "bdecomp/kernels.hpp"

#if defined(__x86_64__) && defined(__GNUC__)

#include <immintrin.h>

#include <cmath>
#include <vector>

#define BDECOMP_AVX2 __attribute__((target("avx2,fma")))

namespace bdecomp::kernels::detail {
namespace {

BDECOMP_AVX2 void bernstein_eval_avx2(const double* coeffs, std::size_t coeff_count, const double* xs, double* out, std::size_t points)
{
    if (coeff_count == 0) {
        for (std::size_t p = 0; p < points; ++p) {
            out[p] = 0.0;
        }
        return;
    }
    std::vector<double> work(4 * coeff_count);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t p = 0;
    for (; p + 4 <= points; p += 4) {
        const __m256d t = _mm256_loadu_pd(xs + p);
        const __m256d s = _mm256_sub_pd(one, t);
        for (std::size_t j = 0; j < coeff_count; ++j) {
            _mm256_storeu_pd(&work[4 * j], _mm256_set1_pd(coeffs[j]));
        }
        for (std::size_t r = 1; r < coeff_count; ++r) {
            __m256d next = _mm256_loadu_pd(&work[0]);
            for (std::size_t j = 0; j + r < coeff_count; ++j) {
                const __m256d cur = next;
                next = _mm256_loadu_pd(&work[4 * (j + 1)]);
                _mm256_storeu_pd(&work[4 * j], _mm256_fmadd_pd(s, cur, _mm256_mul_pd(t, next)));
            }
        }
        _mm256_storeu_pd(out + p, _mm256_loadu_pd(&work[0]));
    }
    if (p < points) {
        scalar_table().bernstein_eval(coeffs, coeff_count, xs + p, out + p, points - p);
    }
}

BDECOMP_AVX2 double max_abs_diff_avx2(const double* a, const double* b, std::size_t count)
{
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d m = _mm256_setzero_pd();
    std::size_t p = 0;
    for (; p + 4 <= count; p += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + p), _mm256_loadu_pd(b + p));
        m = _mm256_max_pd(m, _mm256_andnot_pd(sign, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m);
    double r = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
    for (; p < count; ++p) {
        r = std::fmax(r, std::fabs(a[p] - b[p]));
    }
    return r;
}

BDECOMP_AVX2 double weighted_sum_sq_diff_avx2(const double* a, const double* b, const double* w, std::size_t count)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t p = 0;
    for (; p + 4 <= count; p += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + p), _mm256_loadu_pd(b + p));
        acc = _mm256_fmadd_pd(_mm256_mul_pd(_mm256_loadu_pd(w + p), d), d, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double r = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; p < count; ++p) {
        const double d = a[p] - b[p];
        r += w[p] * d * d;
    }
    return r;
}

BDECOMP_AVX2 void accumulate_abs_avx2(double* acc, const double* v, std::size_t count)
{
    const __m256d sign = _mm256_set1_pd(-0.0);
    std::size_t p = 0;
    for (; p + 4 <= count; p += 4) {
        const __m256d x = _mm256_andnot_pd(sign, _mm256_loadu_pd(v + p));
        _mm256_storeu_pd(acc + p, _mm256_add_pd(_mm256_loadu_pd(acc + p), x));
    }
    for (; p < count; ++p) {
        acc[p] += std::fabs(v[p]);
    }
}

} // namespace

const KernelTable* avx2_table()
{
    static const KernelTable t{bernstein_eval_avx2, max_abs_diff_avx2, weighted_sum_sq_diff_avx2, accumulate_abs_avx2};
    return &t;
}

} // namespace bdecomp::kernels::detail

#else

namespace bdecomp::kernels::detail {
const KernelTable* avx2_table() { return nullptr; }
} // namespace bdecomp::kernels::detail

#endif
