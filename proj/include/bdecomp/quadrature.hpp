#pragma once

#include "bdecomp/approx_real.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace bdecomp {

using RealFunction = std::function<double(double)>;

struct QuadratureResult {
    ApproxReal value;
    ApproxReal error_estimate; ///< >= 0
    std::size_t evaluations = 0;
};

/// Beta_n f(x) = B(nx, n(1-x))^{-1} int_0^1 t^{nx-1} (1-t)^{n(1-x)-1} f(t) dt,
/// with Beta_n f(0) = f(0) and Beta_n f(1) = f(1).
///
/// The integral is split at the given breakpoints (and at 1/2 if no
/// breakpoint separates the endpoints). A panel touching a singular endpoint
/// is integrated in u = t^{nx} (resp. u = (1-t)^{n(1-x)}), which absorbs the
/// weight singularity. The two endpoint panels use tanh-sinh, interior panels
/// adaptive Gauss-Kronrod 61, both in double: value carries at most double
/// accuracy whatever its precision.
///
/// Throws std::invalid_argument for x outside [0,1], tol <= 0 or n == 0,
/// QuadratureError("non-finite integrand") when f returns inf/nan and
/// QuadratureError("quadrature budget exceeded") when the summed error
/// estimate exceeds tol.
QuadratureResult beta_transform(const RealFunction& f, unsigned n, const ApproxReal& x, const ApproxReal& tol,
                                std::span<const double> breakpoints = {});

/// Knots i/n for 0 < i < n, suitable as breakpoints for S_n f.
std::vector<double> interior_knots(unsigned n);

struct SandwichRow {
    unsigned n = 0;
    unsigned power = 0; ///< 2j
    double x = 0;
    double lower = 0;  ///< Beta_n((t - x)^{2j}; x), exact
    double value = 0;  ///< G_n((t - x)^{2j}; x), quadrature
    double upper = 0;  ///< L_n((t - x)^{2j}; x), exact
    bool pass = false;
};

struct ContradictionReport {
    double tol = 0;
    ApproxReal quadrature_value;       ///< Beta_2(u_{2,2}; 1/4)
    ApproxReal closed_form;            ///< (1/2 - pi/8) / (pi/2)
    double bernstein_value = 0.0625;   ///< b_{2,2}(1/4) = 1/16
    double distance = 0;               ///< |quadrature_value - 1/16|
    bool matches_closed_form = false;  ///< within tol
    bool contradiction = false;        ///< distance > 5e-3
    double phi_route_value = 0;        ///< Beta_2(phi_{2,2}; 1/4), must be 1/16
    double phi_route_difference = 0;
    bool phi_route_pass = false;
    /// Beta_n <= G_n <= L_n on (t - x)^{2j}; for 2j = 2 the bounds are
    /// x(1-x)/(n+1) and 2x(1-x)/(n+1).
    std::vector<SandwichRow> sandwich;
    bool pass = false;
};

/// Reproduces G_2 != B_2 numerically. Requires tol <= 1e-4.
ContradictionReport g2_contradiction_check(double tol = 1e-8);

} // namespace bdecomp
