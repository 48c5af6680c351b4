#include "bdecomp/asymptotics.hpp"

#include "bdecomp/bases.hpp"
#include "bdecomp/combinatorics.hpp"
#include "bdecomp/eigen.hpp"
#include "bdecomp/operators.hpp"

#include <stdexcept>

namespace bdecomp {
namespace {

Polynomial x_one_minus_x() { return Polynomial{Rational(0), Rational(1), Rational(-1)}; }

void require_increasing(std::span<const unsigned> n_list)
{
    if (n_list.empty()) {
        throw std::invalid_argument("n_list must not be empty");
    }
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw std::invalid_argument("n_list must be strictly increasing");
        }
    }
}

} // namespace

Polynomial voronovskaya_limit(const Polynomial& p)
{
    const Polynomial w = x_one_minus_x();
    const Polynomial second = w * derivative(p, 2) * Rational(1, 2);
    const Polynomial third = w * Polynomial{Rational(1), Rational(-2)} * derivative(p, 3) * Rational(1, 6);
    return second - third;
}

Polynomial voronovskaya_leading_term(unsigned m)
{
    if (m < 2) {
        return {};
    }
    const Rational scale = make_rational(static_cast<long>(m) * (m - 1), 6);
    const Polynomial linear{Rational(2 - static_cast<long>(m)), Rational(2 * static_cast<long>(m) - 1)};
    return Polynomial::monomial(m - 2, scale) * Polynomial{Rational(1), Rational(-1)} * linear;
}

Polynomial beta_inverse_eigen_limit(unsigned k)
{
    Polynomial sum;
    for (unsigned j = 2; j <= k; ++j) {
        const Rational c = limit_coefficient(k, j) * make_rational(j * (j - 1), 2);
        sum += Polynomial::monomial(j, c) - Polynomial::monomial(j - 1, c);
    }
    return sum;
}

Polynomial f_rate_limit(unsigned k)
{
    Polynomial sum;
    const Rational kk(static_cast<long>(k) * (static_cast<long>(k) - 1));
    for (unsigned j = 0; j <= k; ++j) {
        const Rational c = limit_coefficient(k, j);
        Polynomial term = Polynomial::monomial(j, -kk);
        if (j >= 1) {
            const Rational jj(static_cast<long>(j) * (j - 1));
            term += Polynomial::monomial(j, jj) - Polynomial::monomial(j - 1, jj);
        }
        sum += term * (c / 2);
    }
    return sum;
}

ApproxReal sup_grid_norm(const Polynomial& p, std::size_t grid, unsigned bits)
{
    if (grid < 2) {
        throw std::invalid_argument("grid must have at least 2 points");
    }
    Rational best(0);
    const long last = static_cast<long>(grid - 1);
    for (long i = 0; i <= last; ++i) {
        const Rational v = abs(p(make_rational(i, last)));
        if (v > best) {
            best = v;
        }
    }
    return ApproxReal(best, bits);
}

ConvergenceReport check_convergence(std::string label, const Polynomial& target, std::span<const unsigned> n_list,
                                    const PolynomialSequence& sequence, const ConvergenceBand& band, std::size_t grid,
                                    unsigned bits)
{
    require_increasing(n_list);
    ConvergenceReport report;
    report.label = std::move(label);
    report.target = target;
    report.band = band;
    for (unsigned n : n_list) {
        report.samples.push_back({n, sup_grid_norm(sequence(n) - target, grid, bits)});
    }

    const ApproxReal zero(bits);
    report.exact = true;
    report.pass = true;
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
        const ApproxReal& e = report.samples[i].error;
        report.exact = report.exact && e == zero;
        if (i == 0) {
            continue;
        }
        const ApproxReal& prev = report.samples[i - 1].error;
        if (prev == zero && e == zero) {
            continue;
        }
        if (prev == zero) {
            report.pass = false;
            continue;
        }
        const double ratio = (e / prev).to_double();
        if (ratio > band.max_ratio || ratio < band.min_ratio) {
            report.pass = false;
        }
    }

    const ApproxReal& first = report.samples.front().error;
    const ApproxReal& last = report.samples.back().error;
    if (report.samples.size() >= 2 && first != zero && last != zero) {
        const ApproxReal n0(static_cast<double>(report.samples.front().n), bits);
        const ApproxReal n1(static_cast<double>(report.samples.back().n), bits);
        report.rate_estimate = log(first / last) / log(n1 / n0);
    }
    return report;
}

ConvergenceReport voronovskaya_convergence(const Polynomial& p, std::span<const unsigned> n_list,
                                           const ConvergenceBand& band, std::size_t grid, unsigned bits)
{
    const std::size_t degree = p.degree().value_or(0);
    for (unsigned n : n_list) {
        if (n < degree) {
            throw std::invalid_argument("voronovskaya_convergence: n below deg p");
        }
    }
    return check_convergence("n^2 (F_n p - p) -> V(p)", voronovskaya_limit(p), n_list,
                             [&](unsigned n) {
                                 const Rational n2(static_cast<long>(n) * n);
                                 return (apply_f(n, p) - p) * n2;
                             },
                             band, grid, bits);
}

ConvergenceReport durrmeyer_comparison(const Polynomial& p, std::span<const unsigned> n_list, const ConvergenceBand& band,
                                       std::size_t grid, unsigned bits)
{
    return check_convergence("2 n^2 (B_n p - U_2n p) -> V(p)", voronovskaya_limit(p), n_list,
                             [&](unsigned n) {
                                 const Polynomial u = apply_bernstein(2 * n, apply_beta(2 * n, p));
                                 const Rational scale(2L * n * n);
                                 return (apply_bernstein(n, p) - u) * scale;
                             },
                             band, grid, bits);
}

ConvergenceReport fourth_moment_decay(std::span<const unsigned> n_list, const ConvergenceBand& band, std::size_t grid,
                                      unsigned bits)
{
    return check_convergence("n^2 M_{n,4} -> 0", Polynomial{}, n_list,
                             [](unsigned n) { return central_moment(n, 4) * Rational(static_cast<long>(n) * n); }, band,
                             grid, bits);
}

EigenLimitReport f_on_eigen_limit(unsigned k, std::span<const unsigned> n_list, const ConvergenceBand& band,
                                  std::size_t grid, unsigned bits)
{
    require_increasing(n_list);
    if (k > n_list.front()) {
        throw std::invalid_argument("f_on_eigen_limit: k exceeds n");
    }
    // p_k^{(n)} is needed by all four sequences; compute each once.
    std::vector<EigenPair> pairs;
    for (unsigned n : n_list) {
        pairs.push_back(bernstein_eigenpolynomial(n, k));
    }
    auto pair_of = [&](unsigned n) -> const EigenPair& {
        for (std::size_t i = 0; i < n_list.size(); ++i) {
            if (n_list[i] == n) {
                return pairs[i];
            }
        }
        throw std::logic_error("f_on_eigen_limit: unknown n");
    };

    EigenLimitReport report;
    report.k = k;
    const Polynomial limit = limit_eigenpolynomial(k);
    const ConvergenceBand image_band{band.max_ratio, 0.0};
    report.beta_inverse_image = check_convergence(
        "Beta_n^-1 p_k -> p_k*", limit, n_list,
        [&](unsigned n) { return apply_beta_inverse(n, pair_of(n).eigenpolynomial); }, image_band, grid, bits);
    report.f_image = check_convergence(
        "F_n p_k -> p_k*", limit, n_list,
        [&](unsigned n) { return apply_f(n, pair_of(n).eigenpolynomial); }, image_band, grid, bits);
    report.beta_inverse_rate = check_convergence(
        "n (Beta_n^-1 p_k - p_k) -> L_k", beta_inverse_eigen_limit(k), n_list,
        [&](unsigned n) {
            const Polynomial& p = pair_of(n).eigenpolynomial;
            return (apply_beta_inverse(n, p) - p) * Rational(n);
        },
        band, grid, bits);
    report.f_rate = check_convergence(
        "n (F_n p_k - p_k) -> f-rate limit", f_rate_limit(k), n_list,
        [&](unsigned n) {
            const Polynomial& p = pair_of(n).eigenpolynomial;
            return (apply_f(n, p) - p) * Rational(n);
        },
        band, grid, bits);
    report.lambda_limit = make_rational(-static_cast<long>(k) * (static_cast<long>(k) - 1), 2);
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        report.lambda_rate.emplace_back(n_list[i], (pairs[i].eigenvalue - 1) * Rational(n_list[i]));
    }
    return report;
}

} // namespace bdecomp
