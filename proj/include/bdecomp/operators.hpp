#pragma once

#include "bdecomp/polynomial.hpp"
#include "bdecomp/rational_matrix.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace bdecomp {

enum class OperatorKind {
    Bernstein,         // B_n
    Beta,              // genuine Beta operator restricted to polynomials
    BetaInverse,
    F,                 // BetaInverse o Bernstein
    Stancu,            // Beta o Bernstein
    GenuineDurrmeyer,  // Bernstein o Beta
    DurrmeyerInverse,
    Composite,
};

std::string_view to_string(OperatorKind kind);

/// Parses the CLI spellings: bernstein, beta, beta-inv, F, stancu,
/// durrmeyer, durrmeyer-inv.
std::optional<OperatorKind> parse_operator_kind(std::string_view name);

/// A linear endomorphism of the polynomials of degree <= n, stored in the
/// monomial basis: column j holds the coefficients of the image of x^j.
/// The kind tag is metadata only; operator equality is matrix equality.
struct OperatorMatrix {
    unsigned n = 0;
    OperatorKind kind = OperatorKind::Composite;
    RationalMatrix matrix;

    Polynomial image_of_monomial(std::size_t j) const;

    /// Throws std::invalid_argument when deg p > n.
    Polynomial apply(const Polynomial& p) const;

    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) { return a.matrix == b.matrix; }
};

// Single columns, valid for any n >= 1 and any m (no (n+1)x(n+1) matrix is
// formed). These are what the large-n asymptotic checks use.

/// B_n x^m = sum_j C(n,j) j! S(m,j) / n^m x^j.
Polynomial bernstein_image(unsigned n, unsigned m);
/// nx(nx+1)...(nx+k-1) / (n(n+1)...(n+k-1)).
Polynomial beta_image(unsigned n, unsigned k);
/// (1/n^j) sum_k (-1)^{j-k} (n-1+k)!/(n-1)! S(j,k) x^k.
Polynomial beta_inverse_image(unsigned n, unsigned j);
/// Beta_n^{-1}(B_n x^m).
Polynomial f_image(unsigned n, unsigned m);

/// Applies the operator to an arbitrary polynomial column by column; unlike
/// OperatorMatrix::apply this accepts any degree (B_n has no degree limit).
Polynomial apply_bernstein(unsigned n, const Polynomial& p);
Polynomial apply_beta(unsigned n, const Polynomial& p);
Polynomial apply_beta_inverse(unsigned n, const Polynomial& p);
Polynomial apply_f(unsigned n, const Polynomial& p);

/// Full matrices on the polynomials of degree <= n. All throw
/// std::invalid_argument for n < 1.
OperatorMatrix bernstein_matrix(unsigned n);
OperatorMatrix beta_matrix(unsigned n);
OperatorMatrix beta_inverse_matrix(unsigned n);
OperatorMatrix f_matrix(unsigned n);
/// Beta o Bernstein.
OperatorMatrix stancu_matrix(unsigned n);
/// Bernstein o Beta.
OperatorMatrix durrmeyer_matrix(unsigned n);
/// Exact inverse of durrmeyer_matrix(n) by elimination.
OperatorMatrix durrmeyer_inverse_matrix(unsigned n);

OperatorMatrix operator_matrix(OperatorKind kind, unsigned n);

/// Leading size x size block of the operator matrix (images of x^0..x^{size-1}
/// truncated to the same degree). All operators here map Pi_m into Pi_m, so
/// the block is exact and upper triangular. size may exceed n + 1 for
/// Bernstein, Beta, BetaInverse and F.
RationalMatrix leading_block(OperatorKind kind, unsigned n, std::size_t size);

/// A o B as operators (matrix product A * B). Throws on mismatched n.
OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b);

/// The inverse of Bernstein o Beta written as a finite differential operator:
///   sum_{l=0}^{n-1} (-1)^l (n-1-l)! / (l! (n-1)!) Dtilde^{2l} p,
/// Dtilde^0 = I, Dtilde^{2l} p = D^{l-1}[x^l (1-x)^l D^{l+1} p].
/// Throws std::invalid_argument("outside Pi_n") when deg p > n.
Polynomial durrmeyer_inverse_differential(unsigned n, const Polynomial& p);

/// Dtilde^{2l} p as above.
Polynomial durrmeyer_differential(unsigned l, const Polynomial& p);

/// Second central moment T((t - x)^2; x) = T x^2 - x^2 for an operator that
/// fixes 1 and x.
Polynomial second_moment(const OperatorMatrix& op);

} // namespace bdecomp
