#pragma once

#include "bdecomp/approx_real.hpp"
#include "bdecomp/kernels.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace bdecomp {

/// Psi_n(x) = sum_i |phi_{n,i}(x)|.
///
/// The monomial coefficients of phi_{n,i} alternate in sign and grow to
/// ~1e42 at n = 70, so the reference evaluation converts them once to
/// `bits`-bit floats and runs Horner with fused multiply-add. A second,
/// double-precision route goes through the Bernstein coefficients (at most
/// ~1e11 at n = 70) and the grid kernels; it is accurate to ~1e-12 for n <= 30.
class LebesgueFunction {
public:
    explicit LebesgueFunction(unsigned n, unsigned bits = ApproxReal::default_bits);

    unsigned n() const { return n_; }
    unsigned bits() const { return bits_; }

    /// Requires 0 <= x <= 1.
    ApproxReal operator()(const ApproxReal& x) const;
    ApproxReal operator()(double x) const { return (*this)(ApproxReal(x, bits_)); }

    /// Double route on a batch of points.
    std::vector<double> evaluate_double(std::span<const double> xs, kernels::Isa isa = kernels::best_isa()) const;

    /// Largest |Bernstein coefficient| over the family, a conditioning hint.
    double max_bernstein_coefficient() const;

private:
    unsigned n_;
    unsigned bits_;
    std::vector<std::vector<ApproxReal>> monomial_;
    std::vector<std::vector<double>> bernstein_;
};

ApproxReal lebesgue_function(unsigned n, const ApproxReal& x);

/// Search protocol: scan `scan_points` uniform points, then refine the
/// `candidates` largest interior local maxima by golden-section search on
/// their bracketing grid cells until the bracket is below `x_tolerance`.
struct LebesgueProtocol {
    std::size_t scan_points = 2001;
    std::size_t candidates = 3;
    double x_tolerance = 1e-7;
    unsigned bits = ApproxReal::default_bits;
};

struct LebesgueMax {
    unsigned n = 0;
    ApproxReal argmax;
    ApproxReal max;
};

/// Requires n >= 1.
LebesgueMax lebesgue_max(unsigned n, const LebesgueProtocol& protocol = {});

/// (x, Psi_n(x)) on `grid` uniform points including both endpoints.
std::vector<std::pair<double, ApproxReal>> lebesgue_curve(unsigned n, std::size_t grid,
                                                          unsigned bits = ApproxReal::default_bits);

} // namespace bdecomp
