#pragma once

#include "bdecomp/polynomial.hpp"
#include "bdecomp/rational.hpp"

#include <vector>

namespace bdecomp {

/// Values f(i/n), i = 0..n.
struct NodeSamples {
    unsigned n = 0;
    std::vector<Rational> values;

    /// Samples a polynomial on the grid i/n.
    static NodeSamples of(const Polynomial& f, unsigned n);
};

/// The knots 0, 1/n, ..., 1.
std::vector<Rational> uniform_knots(unsigned n);

/// b_{n,i}(x) = C(n,i) x^i (1-x)^{n-i}, expanded as
/// sum_l C(n,i) C(n-i,l) (-1)^l x^{i+l}.
Polynomial bernstein_basis_polynomial(unsigned n, unsigned i);

/// phi_{n,i} = Beta_n^{-1} b_{n,i}; F_n f = sum_i f(i/n) phi_{n,i}.
Polynomial phi_basis(unsigned n, unsigned i);
std::vector<Polynomial> phi_family(unsigned n);

/// rho_{n,j} = 1/((n-j)! n^{2j-1}) sum_k (-1)^{j-k} (n+k-1)! S(j,k) x^k;
/// F_n f = sum_j [0, 1/n, ..., j/n; f] rho_{n,j}.
Polynomial rho_basis(unsigned n, unsigned j);

enum class SampleBasis { Phi, Bernstein };

/// sum_i f(i/n) phi_{n,i} (F_n) or sum_i f(i/n) b_{n,i} (B_n).
Polynomial apply_to_samples(SampleBasis basis, const NodeSamples& samples);

/// F_n f through the divided-difference representation with rho_{n,j}.
Polynomial apply_f_by_divided_differences(const NodeSamples& samples);

/// M_{n,m}(x) = F_n((t - x)^m; x) = sum_j C(m,j) (-x)^{m-j} (F_n x^j)(x).
Polynomial central_moment(unsigned n, unsigned m);

/// Coefficients of p in the degree-n Bernstein basis and back.
std::vector<Rational> to_bernstein_coefficients(const Polynomial& p, unsigned n);
Polynomial from_bernstein_coefficients(const std::vector<Rational>& coeffs);

} // namespace bdecomp
