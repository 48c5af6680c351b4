#include "bdecomp/verify.hpp"

#include "bdecomp/asymptotics.hpp"
#include "bdecomp/bases.hpp"
#include "bdecomp/closed_forms.hpp"
#include "bdecomp/combinatorics.hpp"
#include "bdecomp/eigen.hpp"
#include "bdecomp/errors.hpp"
#include "bdecomp/jacobi.hpp"
#include "bdecomp/operators.hpp"

#include <random>
#include <sstream>

namespace bdecomp {
namespace {

// Collects the first counterexample and counts evaluated cases.
class Outcome {
public:
    void expect(bool ok, const std::string& what)
    {
        ++cases_;
        if (!ok && pass_) {
            pass_ = false;
            detail_ = what;
        }
    }
    CheckResult result(std::string name) const
    {
        return {std::move(name), pass_, pass_ ? std::to_string(cases_) + " cases" : detail_};
    }

private:
    bool pass_ = true;
    std::size_t cases_ = 0;
    std::string detail_;
};

std::string at(std::initializer_list<std::pair<const char*, long>> params)
{
    std::ostringstream s;
    bool first = true;
    for (const auto& [k, v] : params) {
        s << (first ? "" : " ") << k << '=' << v;
        first = false;
    }
    return s.str();
}

Polynomial x_one_minus_x() { return Polynomial{Rational(0), Rational(1), Rational(-1)}; }

const OperatorKind primary_kinds[] = {OperatorKind::Bernstein, OperatorKind::Beta, OperatorKind::F, OperatorKind::Stancu,
                                      OperatorKind::GenuineDurrmeyer};
const OperatorKind all_kinds[] = {OperatorKind::Bernstein, OperatorKind::Beta,             OperatorKind::BetaInverse,
                                  OperatorKind::F,         OperatorKind::Stancu,           OperatorKind::GenuineDurrmeyer,
                                  OperatorKind::DurrmeyerInverse};

// ---------------------------------------------------------------- exact core

CheckResult stirling_recurrences(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned j = 0; j < o.stirling_max; ++j) {
        for (unsigned i = 0; i <= j + 1; ++i) {
            const Integer s_rec = (i ? stirling_first(j, i - 1) : Integer(0)) - Integer(j) * stirling_first(j, i);
            out.expect(stirling_first(j + 1, i) == s_rec, "s " + at({{"j", j + 1}, {"i", i}}));
            const Integer S_rec = Integer(i) * stirling_second(j, i) + (i ? stirling_second(j, i - 1) : Integer(0));
            out.expect(stirling_second(j + 1, i) == S_rec, "S " + at({{"m", j + 1}, {"i", i}}));
        }
    }
    out.expect(stirling_first(0, 0) == 1 && stirling_second(0, 0) == 1, "s(0,0) = S(0,0) = 1");
    return out.result("stirling recurrences");
}

// With s signed, s(j,k)(-1)^{j-k} is the unsigned count, so the inverse pair
// carries the sign on both factors: sum_k s(j,k) S(k,i) = delta_{ji}.
CheckResult stirling_orthogonality(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned j = 0; j <= o.stirling_max; ++j) {
        for (unsigned i = 0; i <= o.stirling_max; ++i) {
            Integer a = 0;
            Integer b = 0;
            Integer unsigned_sum = 0;
            for (unsigned k = 0; k <= o.stirling_max; ++k) {
                a += stirling_first(j, k) * stirling_second(k, i);
                b += stirling_second(j, k) * stirling_first(k, i);
                if (k <= j && i <= k) {
                    const Integer sign = ((j - k) % 2 == 0) ? 1 : -1;
                    const Integer sign_ki = ((k - i) % 2 == 0) ? 1 : -1;
                    unsigned_sum += stirling_first(j, k) * sign * stirling_second(k, i) * sign_ki;
                }
            }
            out.expect(a == (i == j ? 1 : 0), "sum_k s(j,k) S(k,i) " + at({{"j", j}, {"i", i}}));
            out.expect(b == (i == j ? 1 : 0), "sum_k S(j,k) s(k,i) " + at({{"j", j}, {"i", i}}));
            out.expect(unsigned_sum == (i == j ? 1 : 0),
                       "sum_k s(j,k)(-1)^{j-k} S(k,i)(-1)^{k-i} " + at({{"j", j}, {"i", i}}));
        }
    }
    return out.result("stirling orthogonality");
}

CheckResult random_matrix_inverse(const VerifyOptions& o)
{
    Outcome out;
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (unsigned size = 1; size <= o.random_matrix_max; ++size) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            RationalMatrix m(size, size);
            for (std::size_t r = 0; r < size; ++r) {
                for (std::size_t c = 0; c < size; ++c) {
                    m(r, c) = Rational(num(rng), den(rng));
                    m(r, c).canonicalize();
                }
            }
            try {
                const RationalMatrix inv = inverse(m);
                out.expect(inv * m == RationalMatrix::identity(size), "inv(M) M = I " + at({{"size", size}}));
                out.expect(m * inv == RationalMatrix::identity(size), "M inv(M) = I " + at({{"size", size}}));
                break;
            } catch (const SingularMatrixError&) {
                continue;
            }
        }
    }
    return out.result("random rational matrix inverse");
}

CheckResult divided_difference_grid(const VerifyOptions&)
{
    Outcome out;
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned m = 0; m <= 8; ++m) {
            for (unsigned j = 0; j <= 8; ++j) {
                std::vector<Rational> knots;
                std::vector<Rational> values;
                for (unsigned i = 0; i <= j; ++i) {
                    knots.emplace_back(i, n);
                    knots.back().canonicalize();
                    values.push_back(pow(knots.back(), m));
                }
                const Rational expected =
                    Rational(stirling_second(m, j)) * (j >= m ? Rational(pow(Rational(n), j - m)) : 1 / pow(Rational(n), m - j));
                out.expect(divided_difference(knots, values) == expected, at({{"n", n}, {"m", m}, {"j", j}}));
            }
        }
    }
    return out.result("divided differences of monomials on i/n");
}

// ---------------------------------------------------------------- operators

CheckResult decomposition(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 1; n <= o.decomposition_max_n; ++n) {
        out.expect(compose(beta_matrix(n), f_matrix(n)) == bernstein_matrix(n), at({{"n", n}}));
    }
    return out.result("Beta_n o F_n = B_n");
}

CheckResult f_two_routes(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 1; n <= o.two_route_max_n; ++n) {
        const RationalMatrix via_inverse = inverse(beta_matrix(n).matrix) * bernstein_matrix(n).matrix;
        out.expect(via_inverse == f_matrix(n).matrix, at({{"n", n}}));
    }
    return out.result("F_n = inverse(Beta_n) B_n by elimination");
}

CheckResult beta_inverse_formula(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 1; n <= o.inverse_max_n; ++n) {
        out.expect(inverse(beta_matrix(n).matrix) == beta_inverse_matrix(n).matrix, "closed form vs elimination " + at({{"n", n}}));
    }
    for (unsigned n = 1; n <= o.symmetry_max_n; ++n) {
        out.expect(compose(beta_inverse_matrix(n), beta_matrix(n)).matrix == RationalMatrix::identity(n + 1),
                   "Beta^-1 Beta = I " + at({{"n", n}}));
    }
    for (unsigned n = 2; n <= o.inverse_max_n; ++n) {
        const Rational N(n);
        const Polynomial e2 = (Polynomial::monomial(2, N + 1) - Polynomial::x()) * (1 / N);
        out.expect(beta_inverse_image(n, 2) == e2, "Beta^-1 e_2 " + at({{"n", n}}));
        const Polynomial e4 = (Polynomial::monomial(4, (N + 1) * (N + 2) * (N + 3)) - Polynomial::monomial(3, 6 * (N + 1) * (N + 2)) +
                               Polynomial::monomial(2, 7 * (N + 1)) - Polynomial::x()) *
                              (1 / pow(N, 3));
        out.expect(beta_inverse_image(n, 4) == e4, "Beta^-1 e_4 " + at({{"n", n}}));
    }
    return out.result("Beta_n^-1 closed form");
}

CheckResult durrmeyer_inverse(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 1; n <= o.inverse_max_n; ++n) {
        const OperatorMatrix inv = durrmeyer_inverse_matrix(n);
        for (unsigned j = 0; j <= n; ++j) {
            out.expect(durrmeyer_inverse_differential(n, Polynomial::monomial(j)) == inv.image_of_monomial(j),
                       at({{"n", n}, {"j", j}}));
        }
    }
    return out.result("U_n^-1 as a differential operator");
}

CheckResult fixes_linear(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 1; n <= o.table_max_n; ++n) {
        for (OperatorKind kind : all_kinds) {
            const OperatorMatrix op = operator_matrix(kind, n);
            out.expect(op.image_of_monomial(0) == Polynomial::constant(1), std::string(to_string(kind)) + " e_0 " + at({{"n", n}}));
            out.expect(op.image_of_monomial(1) == Polynomial::x(), std::string(to_string(kind)) + " e_1 " + at({{"n", n}}));
            out.expect(op.matrix.is_upper_triangular(), std::string(to_string(kind)) + " degree-preserving " + at({{"n", n}}));
        }
    }
    return out.result("every operator fixes e_0, e_1 and preserves degree");
}

CheckResult second_moments(const VerifyOptions& o)
{
    Outcome out;
    const Polynomial w = x_one_minus_x();
    for (unsigned n = 2; n <= o.table_max_n; ++n) {
        const OperatorMatrix b = bernstein_matrix(n);
        const OperatorMatrix beta = beta_matrix(n);
        out.expect(second_moment(b) == w * Rational(1, n), "B_n " + at({{"n", n}}));
        out.expect(second_moment(beta) == w * Rational(1, n + 1), "Beta_n " + at({{"n", n}}));
        out.expect(second_moment(stancu_matrix(n)) == w * make_rational(2, n + 1), "L_n " + at({{"n", n}}));
        for (const auto& [p, q] : {std::pair{beta, b}, std::pair{b, beta}}) {
            const Polynomial lhs = second_moment(compose(p, q));
            const Polynomial rhs = p.apply(second_moment(q)) + second_moment(p);
            out.expect(lhs == rhs, "composition identity " + std::string(to_string(p.kind)) + " " + at({{"n", n}}));
        }
    }
    return out.result("second moments and the composition identity");
}

CheckResult phi_family_properties(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 1; n <= o.symmetry_max_n; ++n) {
        const std::vector<Polynomial> phi = phi_family(n);
        Polynomial sum;
        for (unsigned i = 0; i <= n; ++i) {
            out.expect(phi[i](0) == (i == 0 ? 1 : 0), "phi(0) " + at({{"n", n}, {"i", i}}));
            out.expect(phi[i](1) == (i == n ? 1 : 0), "phi(1) " + at({{"n", n}, {"i", i}}));
            out.expect(reflect(phi[i]) == phi[n - i], "symmetry " + at({{"n", n}, {"i", i}}));
            out.expect(apply_beta(n, phi[i]) == bernstein_basis_polynomial(n, i), "Beta phi = b " + at({{"n", n}, {"i", i}}));
            sum += phi[i];
        }
        out.expect(sum == Polynomial::constant(1), "partition of unity " + at({{"n", n}}));
    }
    const Polynomial w = x_one_minus_x();
    out.expect(phi_basis(2, 1) == w * Rational(3), "phi_{2,1}");
    out.expect(phi_basis(1, 0) == Polynomial{Rational(1), Rational(-1)}, "phi_{1,0}");
    out.expect(phi_basis(4, 2) == w * Rational(15, 32) * (w * Rational(42) - Polynomial::constant(5)), "phi_{4,2}");
    return out.result("phi family: endpoints, symmetry, partition");
}

CheckResult durrmeyer_square(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 1; n <= o.square_max_n; ++n) {
        const OperatorMatrix b = bernstein_matrix(n);
        out.expect(compose(durrmeyer_matrix(n), f_matrix(n)) == compose(b, b), at({{"n", n}}));
    }
    return out.result("U_n o F_n = B_n^2");
}

CheckResult durrmeyer_kernel(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 2; n <= o.table_max_n; ++n) {
        const std::vector<Polynomial> phi = phi_family(n);
        for (unsigned k = 1; k < n; ++k) {
            const Polynomial kernel = bernstein_basis_polynomial(n - 2, k - 1) * Rational(n - 1);
            for (unsigned i = 0; i <= n; ++i) {
                const Rational lhs = definite_integral(kernel * phi[i], 0, 1);
                out.expect(lhs == bernstein_basis_polynomial(n, i)(make_rational(k, n)), at({{"n", n}, {"k", k}, {"i", i}}));
            }
        }
    }
    return out.result("(n-1) int b_{n-2,k-1} phi_{n,i} = b_{n,i}(k/n)");
}

CheckResult sample_representations(const VerifyOptions&)
{
    Outcome out;
    for (unsigned n = 1; n <= 8; ++n) {
        const OperatorMatrix f = f_matrix(n);
        const OperatorMatrix b = bernstein_matrix(n);
        for (unsigned j = 0; j <= n; ++j) {
            const NodeSamples s = NodeSamples::of(Polynomial::monomial(j), n);
            out.expect(apply_to_samples(SampleBasis::Phi, s) == f.image_of_monomial(j), "phi samples " + at({{"n", n}, {"j", j}}));
            out.expect(apply_to_samples(SampleBasis::Bernstein, s) == b.image_of_monomial(j), "b samples " + at({{"n", n}, {"j", j}}));
            out.expect(apply_f_by_divided_differences(s) == f.image_of_monomial(j), "rho route " + at({{"n", n}, {"j", j}}));
        }
    }
    for (unsigned n = 2; n <= 12; ++n) {
        const Rational N(n);
        out.expect(rho_basis(n, 0) == Polynomial::constant(1) && rho_basis(n, 1) == Polynomial::x(), "rho_0, rho_1 " + at({{"n", n}}));
        out.expect(rho_basis(n, 2) == Polynomial{Rational(0), Rational(-1), N + 1} * ((N - 1) / (N * N)), "rho_2 " + at({{"n", n}}));
    }
    return out.result("sample, divided-difference and rho representations of F_n");
}

CheckResult monomial_images(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 2; n <= o.table_max_n; ++n) {
        for (unsigned m = 0; m <= 6; ++m) {
            out.expect(f_image(n, m) == f_image_closed_form(n, m), at({{"n", n}, {"m", m}}));
        }
        const Rational N(n);
        out.expect(bernstein_image(n, 2) == Polynomial{Rational(0), 1 / N, (N - 1) / N}, "B_n e_2 " + at({{"n", n}}));
        out.expect(beta_image(n, 2) == Polynomial{Rational(0), 1 / (N + 1), N / (N + 1)}, "Beta_n e_2 " + at({{"n", n}}));
    }
    return out.result("F_n e_m closed forms, m <= 6");
}

CheckResult non_positivity(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 2; n <= o.table_max_n; ++n) {
        const Polynomial f3 = f_image(n, 3);
        const Rational attained = f3(witness_attaining_point(n));
        out.expect(attained == witness_closed_form(n) && attained < 0, "at 1/(n+2)^2 " + at({{"n", n}}));
        const Rational stated = f3(witness_point(n));
        out.expect(stated == witness_value_at_stated_point(n) && stated <= 0, "at 1/(n+1)^2 " + at({{"n", n}}));
    }
    out.expect(f_image(2, 3)(Rational(1, 16)) == Rational(-7, 2048), "F_2(e_3; 1/16) = -7/2048");
    return out.result("F_n(e_3; .) takes negative values");
}

CheckResult moments(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 2; n <= o.table_max_n; ++n) {
        for (unsigned m = 0; m <= 6; ++m) {
            out.expect(central_moment(n, m) == moment_closed_form(n, m), at({{"n", n}, {"m", m}}));
        }
    }
    for (unsigned n = 2; n <= o.decomposition_max_n; ++n) {
        const Polynomial lhs = (f_image(n, 2) - Polynomial::monomial(2)) * Rational(n * n);
        out.expect(lhs == x_one_minus_x(), "n^2 (F_n e_2 - e_2) = x(1-x) " + at({{"n", n}}));
    }
    return out.result("moments M_{n,m}, m <= 6");
}

// ---------------------------------------------------------------- eigen

CheckResult spectra(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 1; n <= o.table_max_n; ++n) {
        for (OperatorKind kind : all_kinds) {
            const Spectrum s = spectrum(kind, n);
            const OperatorMatrix op = operator_matrix(kind, n);
            const std::string tag = std::string(to_string(kind)) + " " + at({{"n", n}});
            out.expect(s.values.size() == n + 1, "size " + tag);
            for (unsigned k = 0; k <= n; ++k) {
                out.expect(op.matrix(k, k) == s.values[k], "diagonal " + tag + " k=" + std::to_string(k));
            }
            out.expect(s.values[0] == 1 && s.values[1] == 1, "fixes e_0, e_1 " + tag);
            const bool inverse_kind = kind == OperatorKind::BetaInverse || kind == OperatorKind::DurrmeyerInverse;
            for (unsigned k = 2; k <= n; ++k) {
                out.expect(inverse_kind ? s.values[k] > s.values[k - 1] : s.values[k] < s.values[k - 1], "monotone " + tag);
            }
        }
        for (unsigned k = 0; k <= n; ++k) {
            out.expect(f_eigenvalue(n, k) == eigenvalue(OperatorKind::Bernstein, n, k) / eigenvalue(OperatorKind::Beta, n, k),
                       "nu = lambda / eta " + at({{"n", n}, {"k", k}}));
        }
        if (n >= 2) {
            out.expect(eigenvalue(OperatorKind::Beta, n, 2) == Rational(n, n + 1), "eta_2 " + at({{"n", n}}));
        }
    }
    return out.result("spectra: closed forms, diagonals, monotonicity");
}

CheckResult eigen_equations(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 1; n <= o.table_max_n; ++n) {
        for (OperatorKind kind : primary_kinds) {
            const OperatorMatrix op = operator_matrix(kind, n);
            for (unsigned k = 0; k <= n; ++k) {
                const EigenPair e = eigenpair(kind, n, k);
                const std::string tag = std::string(to_string(kind)) + " " + at({{"n", n}, {"k", k}});
                out.expect(e.eigenpolynomial.degree() == k && e.eigenpolynomial.leading_coefficient() == 1, "monic " + tag);
                out.expect(op.apply(e.eigenpolynomial) == e.eigenpolynomial * e.eigenvalue, "T p = lambda p " + tag);
            }
        }
        for (unsigned k = 0; k <= n; ++k) {
            const EigenPair q = beta_eigenpolynomial(n, k);
            const EigenPair p = bernstein_eigenpolynomial(n, k);
            out.expect(q.eigenpolynomial == eigenpair(OperatorKind::Beta, n, k).eigenpolynomial, "recurrence vs kernel " + at({{"n", n}, {"k", k}}));
            out.expect(beta_matrix(n).apply(q.eigenpolynomial) == q.eigenpolynomial * q.eigenvalue, "Beta q = eta q " + at({{"n", n}, {"k", k}}));
            if (k >= 1) {
                out.expect(q.eigenpolynomial.coefficient(k - 1) == make_rational(-static_cast<long>(k), 2), "a(n,k,k-1) " + at({{"n", n}, {"k", k}}));
            }
            if (k >= 2) {
                out.expect(q.eigenpolynomial.coefficient(k - 2) == beta_subsubleading_closed_form(n, k), "a(n,k,k-2) " + at({{"n", n}, {"k", k}}));
            }
            if (k <= 3) {
                out.expect(q.eigenpolynomial == p.eigenpolynomial, "q_k = p_k " + at({{"n", n}, {"k", k}}));
            }
        }
        if (n >= 4) {
            out.expect(beta_eigenpolynomial(n, 4).eigenpolynomial == beta_q4_closed_form(n), "q_4 " + at({{"n", n}}));
            out.expect(bernstein_eigenpolynomial(n, 4).eigenpolynomial == bernstein_p4_closed_form(n), "p_4 " + at({{"n", n}}));
        }
    }
    return out.result("eigen-equations and eigenpolynomial coefficients");
}

CheckResult limit_polynomials(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned k = 0; k <= o.limit_max_k; ++k) {
        out.expect(limit_eigenpolynomial(k) == limit_eigenpolynomial_from_coefficients(k), "two routes " + at({{"k", k}}));
        out.expect(limit_coefficient(k, k) == 1, "a*(k,k) " + at({{"k", k}}));
        if (k >= 1) {
            out.expect(limit_coefficient(k, k - 1) == make_rational(-static_cast<long>(k), 2), "a*(k,k-1) " + at({{"k", k}}));
        }
    }
    out.expect(limit_coefficient(1, 0) == Rational(-1, 2), "c*(0,1)");
    const Polynomial p2{Rational(0), Rational(-1), Rational(1)};
    out.expect(limit_eigenpolynomial(2) == p2, "p_2*");
    out.expect(limit_eigenpolynomial(3) == p2 * Polynomial{Rational(-1, 2), Rational(1)}, "p_3*");
    return out.result("limit eigenpolynomials");
}

CheckResult jacobi(const VerifyOptions&)
{
    Outcome out;
    const Polynomial w = x_one_minus_x();
    for (unsigned i = 0; i <= 8; ++i) {
        for (unsigned j = 0; j <= 8; ++j) {
            const Rational v = definite_integral(w * jacobi_shifted(i) * jacobi_shifted(j), 0, 1);
            out.expect(i == j ? v == jacobi_norm(i) && v > 0 : v == 0, at({{"i", i}, {"j", j}}));
        }
    }
    out.expect(jacobi_shifted(0) == Polynomial::constant(1) && jacobi_norm(0) == Rational(1, 6), "J_0, h_0");
    out.expect(jacobi_shifted(1) == Polynomial{Rational(-2), Rational(4)}, "J_1");
    return out.result("shifted Jacobi orthogonality");
}

CheckResult durrmeyer_eigen(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned k = 0; k <= o.limit_max_k; ++k) {
        out.expect(durrmeyer_eigenpolynomial(k) == durrmeyer_jacobi_eigenpolynomial(k) * durrmeyer_gauge_constant(k),
                   "Rodrigues vs Jacobi gauge " + at({{"k", k}}));
        for (unsigned l = 0; l <= k + 1; ++l) {
            const Polynomial p = durrmeyer_eigenpolynomial(k);
            const Polynomial image = l == 0 ? p : durrmeyer_differential(l, p);
            out.expect(image == p * durrmeyer_differential_eigenvalue(k, l), "Dtilde eigen " + at({{"k", k}, {"l", l}}));
        }
    }
    for (unsigned n = 1; n <= o.inverse_max_n; ++n) {
        const OperatorMatrix u = durrmeyer_matrix(n);
        for (unsigned k = 0; k <= n; ++k) {
            const Polynomial p = durrmeyer_eigenpolynomial(k);
            const Rational omega = eigenvalue(OperatorKind::GenuineDurrmeyer, n, k);
            out.expect(u.apply(p) == p * omega, "U_n p_k " + at({{"n", n}, {"k", k}}));
            out.expect(durrmeyer_inverse_differential(n, p) == p * (1 / omega), "U_n^-1 p_k " + at({{"n", n}, {"k", k}}));
        }
    }
    return out.result("U_n eigenpolynomials and the differential operators");
}

CheckResult dual_expansions(const VerifyOptions& o)
{
    Outcome out;
    for (unsigned n = 1; n <= o.inverse_max_n; ++n) {
        const OperatorMatrix b = bernstein_matrix(n);
        const OperatorMatrix f = f_matrix(n);
        std::vector<EigenPair> pairs;
        for (unsigned k = 0; k <= n; ++k) {
            pairs.push_back(bernstein_eigenpolynomial(n, k));
        }
        for (unsigned j = 0; j <= n; ++j) {
            const Polynomial e = Polynomial::monomial(j);
            const Polynomial bf = b.image_of_monomial(j);

            const std::vector<Rational> mu = bernstein_dual_coefficients(n, e);
            Polynomial sum_mu;
            for (unsigned k = 0; k <= n; ++k) {
                sum_mu += pairs[k].eigenpolynomial * (pairs[k].eigenvalue * mu[k]);
            }
            out.expect(sum_mu == bf, "B_n f from mu " + at({{"n", n}, {"j", j}}));

            const std::vector<Rational> nu = durrmeyer_dual_coefficients(n, e);
            Polynomial sum_nu = Polynomial{e(0), e(1) - e(0)};
            for (unsigned k = 2; k <= n; ++k) {
                sum_nu += durrmeyer_jacobi_eigenpolynomial(k) * (eigenvalue(OperatorKind::GenuineDurrmeyer, n, k) * nu[k]);
            }
            out.expect(sum_nu == bf, "B_n f from nu " + at({{"n", n}, {"j", j}}));

            const std::vector<Rational> nu_b = durrmeyer_dual_coefficients(n, bf);
            Polynomial f_sum;
            for (unsigned k = 0; k <= n; ++k) {
                f_sum += durrmeyer_jacobi_eigenpolynomial(k) * nu_b[k];
            }
            out.expect(f_sum == f.image_of_monomial(j), "F_n f from nu(B_n f) " + at({{"n", n}, {"j", j}}));
        }
        for (unsigned k = 0; k <= n; ++k) {
            const std::vector<Rational> mu = bernstein_dual_coefficients(n, pairs[k].eigenpolynomial);
            for (unsigned i = 0; i <= n; ++i) {
                out.expect(mu[i] == (i == k ? 1 : 0), "mu(p_k) " + at({{"n", n}, {"k", k}, {"i", i}}));
            }
        }
    }
    return out.result("dual functional expansions");
}

// Error ratios between consecutive n in {10, 100, 1000} must lie in
// [0.05, 0.2] unless both errors vanish.
bool first_order(const std::vector<Rational>& errors, std::string& why)
{
    for (std::size_t i = 1; i < errors.size(); ++i) {
        if (errors[i - 1] == 0 && errors[i] == 0) {
            continue;
        }
        if (errors[i - 1] == 0) {
            why = "error appears after vanishing";
            return false;
        }
        const Rational r = errors[i] / errors[i - 1];
        if (r < Rational(1, 20) || r > Rational(1, 5)) {
            why = "ratio " + std::to_string(r.get_d());
            return false;
        }
    }
    return true;
}

CheckResult coefficient_convergence(const VerifyOptions& o)
{
    Outcome out;
    if (!o.include_limits) {
        return out.result("eigenpolynomial coefficients converge at rate 1/n (skipped)");
    }
    const unsigned ns[] = {10, 100, 1000};
    for (unsigned k = 0; k <= 6; ++k) {
        std::vector<Polynomial> q;
        std::vector<Polynomial> p;
        for (unsigned n : ns) {
            q.push_back(beta_eigenpolynomial(n, k).eigenpolynomial);
            p.push_back(bernstein_eigenpolynomial(n, k).eigenpolynomial);
        }
        for (unsigned j = 0; j < k; ++j) {
            const Rational target = limit_coefficient(k, j);
            for (const auto* family : {&q, &p}) {
                std::vector<Rational> errors;
                for (const Polynomial& poly : *family) {
                    errors.push_back(abs(poly.coefficient(j) - target));
                }
                const std::string tag = std::string(family == &q ? "q" : "p") + " " + at({{"k", k}, {"j", j}});
                std::string why;
                out.expect(first_order(errors, why), "rate " + tag + " " + why);
                // At n = 1000 the error is within 10 C / n, C = 10 e(10).
                out.expect(errors[2] * 10 <= errors[0], "bound at n=1000 " + tag);
            }
        }
    }
    return out.result("eigenpolynomial coefficients converge at rate 1/n");
}

// ---------------------------------------------------------------- asymptotics

CheckResult voronovskaya_forms(const VerifyOptions&)
{
    Outcome out;
    for (unsigned m = 0; m <= 12; ++m) {
        out.expect(voronovskaya_leading_term(m) == voronovskaya_limit(Polynomial::monomial(m)), at({{"m", m}}));
    }
    out.expect(voronovskaya_limit(Polynomial::monomial(2)) == x_one_minus_x(), "V(e_2)");
    return out.result("V(e_m) factored form");
}

CheckResult asymptotic_limits(const VerifyOptions& o)
{
    Outcome out;
    if (!o.include_limits) {
        return out.result("asymptotic limits (skipped)");
    }
    const unsigned ns[] = {100, 1000};
    for (unsigned m = 2; m <= 6; ++m) {
        const Polynomial p = Polynomial::monomial(m);
        out.expect(durrmeyer_comparison(p, ns).pass, "2 n^2 (B_n - U_2n) e_m -> V(e_m) " + at({{"m", m}}));
    }
    out.expect(fourth_moment_decay(ns, {1.0, 0.0}).pass, "n^2 M_{n,4} -> 0");
    for (unsigned k = 0; k <= 5; ++k) {
        const EigenLimitReport r = f_on_eigen_limit(k, ns);
        out.expect(r.beta_inverse_image.pass, "Beta_n^-1 p_k -> p_k* " + at({{"k", k}}));
        out.expect(r.f_image.pass, "F_n p_k -> p_k* " + at({{"k", k}}));
        out.expect(r.f_rate.pass, "n (F_n p_k - p_k) " + at({{"k", k}}));
    }
    return out.result("polynomial-level limits");
}

} // namespace

const std::vector<NamedCheck>& exact_identity_checks()
{
    static const std::vector<NamedCheck> checks = [] {
        std::vector<NamedCheck> v;
        auto add = [&](std::string name, CheckResult (*fn)(const VerifyOptions&)) { v.push_back({std::move(name), fn}); };
        add("stirling-recurrences", stirling_recurrences);
        add("stirling-orthogonality", stirling_orthogonality);
        add("matrix-inverse", random_matrix_inverse);
        add("divided-differences", divided_difference_grid);
        add("decomposition", decomposition);
        add("f-two-routes", f_two_routes);
        add("beta-inverse", beta_inverse_formula);
        add("durrmeyer-inverse", durrmeyer_inverse);
        add("fixes-linear", fixes_linear);
        add("second-moments", second_moments);
        add("phi-family", phi_family_properties);
        add("durrmeyer-square", durrmeyer_square);
        add("durrmeyer-kernel", durrmeyer_kernel);
        add("sample-representations", sample_representations);
        add("monomial-images", monomial_images);
        add("non-positivity", non_positivity);
        add("moments", moments);
        add("spectra", spectra);
        add("eigen-equations", eigen_equations);
        add("limit-polynomials", limit_polynomials);
        add("jacobi", jacobi);
        add("durrmeyer-eigen", durrmeyer_eigen);
        add("dual-expansions", dual_expansions);
        add("coefficient-convergence", coefficient_convergence);
        add("voronovskaya-forms", voronovskaya_forms);
        add("asymptotic-limits", asymptotic_limits);
        return v;
    }();
    return checks;
}

std::vector<CheckResult> run_exact_identities(const VerifyOptions& options,
                                              const std::function<void(const CheckResult&)>& progress)
{
    std::vector<CheckResult> results;
    for (const NamedCheck& check : exact_identity_checks()) {
        CheckResult r;
        try {
            r = check.run(options);
        } catch (const std::exception& e) {
            r = {check.name, false, std::string("exception: ") + e.what()};
        }
        r.name = check.name + ": " + r.name;
        if (progress) {
            progress(r);
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace bdecomp
