#pragma once

#include "bdecomp/operators.hpp"
#include "bdecomp/polynomial.hpp"

#include <vector>

namespace bdecomp {

/// Eigenvalues of an operator on Pi_n, indexed by k = 0..n. Every operator
/// in the family maps Pi_k into Pi_k, so value k belongs to an eigenpolynomial
/// of exact degree k.
struct Spectrum {
    OperatorKind kind = OperatorKind::Bernstein;
    unsigned n = 0;
    std::vector<Rational> values;
};

struct EigenPair {
    unsigned k = 0;
    Rational eigenvalue;
    Polynomial eigenpolynomial; ///< monic, degree k
};

/// Closed forms:
///   Bernstein        lambda_k = n! / ((n-k)! n^k)
///   Beta             eta_k    = (n-1)! n^k / (n+k-1)!
///   F                nu_k     = (n-1+k)! / ((n-k)! n^{2k-1})
///   GenuineDurrmeyer omega_k  = (n-1)! n! / ((n-k)! (n+k-1)!)
/// Stancu is eta_k lambda_k; the two inverses are reciprocals.
/// Throws std::invalid_argument for Composite or n < 1 or k > n.
Rational eigenvalue(OperatorKind kind, unsigned n, unsigned k);
Spectrum spectrum(OperatorKind kind, unsigned n);

/// Eigenvalue nu_k of F_n (named apart from the dual functionals).
inline Rational f_eigenvalue(unsigned n, unsigned k) { return eigenvalue(OperatorKind::F, n, k); }

/// Monic kernel vector of (T - lambda I) on the leading (k+1)x(k+1) block of an
/// upper triangular T. The double eigenvalue at k = 0, 1 is resolved by the
/// symmetric choice x - 1/2 for k = 1. Throws InternalError for any other
/// repeated eigenvalue.
Polynomial triangular_eigenpolynomial(const RationalMatrix& block, unsigned k, const Rational& lambda);

/// q_k^{(n)} of the Beta operator from the top-down coefficient recurrence
///   a(n,k,i) = sum_{j>i} (-1)^{j-i-1} s(j,i) (n+j)...(n+k-1) a(n,k,j)
///              / ((n+i)...(n+k-1) - n^{k-i}),     a(n,k,k) = 1.
/// Valid for any n >= 1 and k >= 0.
EigenPair beta_eigenpolynomial(unsigned n, unsigned k);

/// p_k^{(n)} of B_n by exact back substitution; k may exceed n only in the
/// sense that it is rejected.
EigenPair bernstein_eigenpolynomial(unsigned n, unsigned k);

/// Any kind, by the triangular kernel solve (k <= n). At k = 1 the U_n kinds
/// return x, the others x - 1/2.
EigenPair eigenpair(OperatorKind kind, unsigned n, unsigned k);

/// a*(k,j) = prod_{l=1}^{k-j} (k+1-l)(k-l) / (l (l-2k+1)); the 0/0 case
/// (k,j) = (1,0) is -1/2. Zero for j > k.
Rational limit_coefficient(unsigned k, unsigned j);

/// p_k^*(x) = k!(k-2)!/(2k-2)! x(x-1) P_{k-2}^{(1,1)}(2x-1) for k >= 2,
/// p_0^* = 1, p_1^* = x - 1/2.
Polynomial limit_eigenpolynomial(unsigned k);

/// sum_j a*(k,j) x^j; equal to limit_eigenpolynomial(k).
Polynomial limit_eigenpolynomial_from_coefficients(unsigned k);

/// B_n f = sum_k lambda_k mu_k(f) p_k^{(n)}; returns mu_0..mu_n.
/// Throws std::invalid_argument when deg f > n.
std::vector<Rational> bernstein_dual_coefficients(unsigned n, const Polynomial& f);

// Genuine Bernstein-Durrmeyer operator U_n = B_n o Beta_n.

/// p_0 = 1, p_1 = x, p_k = D^{k-2}[x^{k-1}(1-x)^{k-1}] (n-independent).
Polynomial durrmeyer_eigenpolynomial(unsigned k);

/// 1, x, x(1-x) J_{k-2}(x): the same eigenpolynomials rescaled to the
/// shifted-Jacobi gauge used by the dual functionals.
Polynomial durrmeyer_jacobi_eigenpolynomial(unsigned k);

/// c with durrmeyer_eigenpolynomial(k) = c * durrmeyer_jacobi_eigenpolynomial(k).
Rational durrmeyer_gauge_constant(unsigned k);

/// gamma_k^{(l)} = (-1)^l (k-1+l)!/(k-1-l)! for l <= k-1, else 0:
/// the eigenvalue of Dtilde^{2l} on p_k.
Rational durrmeyer_differential_eigenvalue(unsigned k, unsigned l);

/// nu_0(f) = f(0), nu_1(f) = f(1) - f(0), and for k >= 2
///   nu_k(f) = omega_k^{-1} h_{k-2}^{-1} int_0^1 (B_n f - Lf) J_{k-2},
/// with Lf = (1-x) f(0) + x f(1), so that
///   B_n f = Lf + sum_{k>=2} omega_k nu_k(f) x(1-x) J_{k-2}.
/// Throws std::invalid_argument when deg f > n or k > n.
Rational durrmeyer_dual_coefficient(unsigned n, unsigned k, const Polynomial& f);
std::vector<Rational> durrmeyer_dual_coefficients(unsigned n, const Polynomial& f);

} // namespace bdecomp
