#pragma once

#include "bdecomp/approx_real.hpp"
#include "bdecomp/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bdecomp {

/// V(p) = x(1-x)/2 p'' - x(1-x)(1-2x)/6 p'''.
Polynomial voronovskaya_limit(const Polynomial& p);

/// V(e_m) in factored form: m(m-1)/6 x^{m-2} (1-x) ((2m-1)x - m + 2), zero
/// for m < 2.
Polynomial voronovskaya_leading_term(unsigned m);

/// Limit of n(Beta_n^{-1} p_k^{(n)} - p_k^{(n)}):
///   L_k = sum_{j=2}^{k} c*(j,k) j(j-1)/2 (x^j - x^{j-1}),
/// where c*(j,k) = a*(k,j) is the x^j coefficient of p_k^*; zero for k < 2.
Polynomial beta_inverse_eigen_limit(unsigned k);

/// Limit of n(F_n p_k^{(n)} - p_k^{(n)}):
///   1/2 sum_j [(j-1) j (x^j - x^{j-1}) - k(k-1) x^j] c*(j,k).
Polynomial f_rate_limit(unsigned k);

struct ConvergenceSample {
    unsigned n = 0;
    ApproxReal error; ///< max over the grid of |sequence(n) - target|
};

/// Consecutive samples must satisfy min_ratio <= e(n') / e(n) <= max_ratio,
/// unless both errors are exactly zero.
struct ConvergenceBand {
    double max_ratio = 0.2;
    double min_ratio = 0.0;
};

struct ConvergenceReport {
    std::string label;
    Polynomial target;
    std::vector<ConvergenceSample> samples;
    ConvergenceBand band;
    /// Observed order r in e(n) ~ C n^{-r} from the first and last samples;
    /// empty when either error is zero.
    std::optional<ApproxReal> rate_estimate;
    bool exact = false; ///< every error is zero
    bool pass = false;
};

/// Largest |p(i/(grid-1))| over the grid, evaluated exactly and rounded once.
ApproxReal sup_grid_norm(const Polynomial& p, std::size_t grid, unsigned bits = ApproxReal::default_bits);

using PolynomialSequence = std::function<Polynomial(unsigned n)>;

/// Throws std::invalid_argument unless n_list is strictly increasing and
/// non-empty, or when grid < 2.
ConvergenceReport check_convergence(std::string label, const Polynomial& target, std::span<const unsigned> n_list,
                                    const PolynomialSequence& sequence, const ConvergenceBand& band = {},
                                    std::size_t grid = 201, unsigned bits = ApproxReal::default_bits);

/// n^2 (F_n p - p) against V(p). Throws std::invalid_argument when some
/// n < deg p.
ConvergenceReport voronovskaya_convergence(const Polynomial& p, std::span<const unsigned> n_list,
                                           const ConvergenceBand& band = {}, std::size_t grid = 201,
                                           unsigned bits = ApproxReal::default_bits);

/// 2 n^2 (B_n p - U_{2n} p) against V(p), with U_{2n} = B_{2n} o Beta_{2n}.
ConvergenceReport durrmeyer_comparison(const Polynomial& p, std::span<const unsigned> n_list,
                                       const ConvergenceBand& band = {}, std::size_t grid = 201,
                                       unsigned bits = ApproxReal::default_bits);

/// n^2 M_{n,4} against 0.
ConvergenceReport fourth_moment_decay(std::span<const unsigned> n_list, const ConvergenceBand& band = {},
                                      std::size_t grid = 201, unsigned bits = ApproxReal::default_bits);

struct EigenLimitReport {
    unsigned k = 0;
    ConvergenceReport beta_inverse_image; ///< Beta_n^{-1} p_k^{(n)} -> p_k^*
    ConvergenceReport f_image;            ///< F_n p_k^{(n)} -> p_k^*
    ConvergenceReport beta_inverse_rate;  ///< n(Beta_n^{-1} p - p) -> L_k
    ConvergenceReport f_rate;             ///< n(F_n p - p) -> f_rate_limit(k)
    /// (n, n(lambda_k - 1)), exact, with the limit -k(k-1)/2.
    std::vector<std::pair<unsigned, Rational>> lambda_rate;
    Rational lambda_limit;
};

/// Requires k <= min(n_list). The two rate checks use `band`; the two image
/// checks use only its upper ratio, since F_n p_k^{(n)} may converge faster
/// than first order.
EigenLimitReport f_on_eigen_limit(unsigned k, std::span<const unsigned> n_list, const ConvergenceBand& band = {},
                                  std::size_t grid = 201, unsigned bits = ApproxReal::default_bits);

} // namespace bdecomp
