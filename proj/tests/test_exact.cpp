#include "bdecomp/combinatorics.hpp"
#include "bdecomp/errors.hpp"
#include "bdecomp/polynomial.hpp"
#include "bdecomp/rational.hpp"
#include "bdecomp/rational_matrix.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

using namespace bdecomp;

namespace {

// Permutations of {0..j-1} with exactly i cycles.
long count_permutations_by_cycles(unsigned j, unsigned i)
{
    std::vector<int> perm(j);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        std::vector<bool> seen(j, false);
        unsigned cycles = 0;
        for (unsigned s = 0; s < j; ++s) {
            if (seen[s]) {
                continue;
            }
            ++cycles;
            for (int c = static_cast<int>(s); !seen[c]; c = perm[c]) {
                seen[c] = true;
            }
        }
        count += cycles == i;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Set partitions of an m-set into j blocks, enumerated as restricted growth strings.
long count_partitions(unsigned m, unsigned j)
{
    std::vector<unsigned> rgs(m, 0);
    long count = 0;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned blocks) {
        if (pos == m) {
            count += blocks == j;
            return;
        }
        for (unsigned b = 0; b <= blocks; ++b) {
            rgs[pos] = b;
            rec(pos + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return m == 0 ? (j == 0) : count;
}

Rational q(long a, long b) { return make_rational(a, b); }

Polynomial random_polynomial(std::mt19937& rng, std::size_t degree)
{
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= degree; ++i) {
        c.push_back(q(num(rng), den(rng)));
    }
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("rational canonical form and text round trip")
{
    CHECK(make_rational(6, -4) == q(-3, 2));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational("-3/2") == q(-3, 2));
    CHECK(parse_rational("12/8") == q(3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS(make_rational(1, 0));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(pow(q(2, 3), 3) == q(8, 27));
    CHECK(pow(q(2, 3), 0) == 1);
}

TEST_CASE("stirling numbers against brute-force counts")
{
    for (unsigned j = 0; j <= 7; ++j) {
        for (unsigned i = 0; i <= j; ++i) {
            const long unsigned_count = j == 0 ? 1 : count_permutations_by_cycles(j, i);
            const long sign = (j - i) % 2 == 0 ? 1 : -1;
            CAPTURE(j);
            CAPTURE(i);
            CHECK(stirling_first(j, i) == sign * unsigned_count);
        }
    }
    for (unsigned m = 0; m <= 9; ++m) {
        for (unsigned j = 0; j <= m + 1; ++j) {
            CAPTURE(m);
            CAPTURE(j);
            CHECK(stirling_second(m, j) == count_partitions(m, j));
        }
    }
}

TEST_CASE("stirling published values")
{
    CHECK(stirling_first(3, 1) == 2);
    CHECK(stirling_second(4, 2) == 7);
    CHECK(stirling_first(2, 5) == 0);
    for (unsigned k = 1; k <= 15; ++k) {
        CHECK(stirling_first(k, k) == 1);
        CHECK(stirling_first(k, k - 1) == -Integer(k * (k - 1) / 2));
        CHECK(stirling_second(k, k - 1) == Integer(k * (k - 1) / 2));
        if (k >= 2) {
            CHECK(24 * stirling_second(k, k - 2) == Integer(k * (k - 1) * (k - 2) * (3 * k - 5)));
        }
    }
}

TEST_CASE("stirling rising factorial expansion")
{
    // nx(nx+1)...(nx+j-1) = sum_i s(j,i)(-1)^{j-i} n^i x^i
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned j = 0; j <= 8; ++j) {
            Polynomial rising = Polynomial::constant(1);
            for (unsigned l = 0; l < j; ++l) {
                rising *= Polynomial{Rational(l), Rational(n)};
            }
            Polynomial expanded;
            for (unsigned i = 0; i <= j; ++i) {
                const Integer sign = (j - i) % 2 == 0 ? 1 : -1;
                expanded += Polynomial::monomial(i, Rational(stirling_first(j, i) * sign * pow(Rational(n), i)));
            }
            CHECK(rising == expanded);
        }
    }
}

TEST_CASE("stirling inverse pair")
{
    for (unsigned j = 0; j <= 12; ++j) {
        for (unsigned i = 0; i <= 12; ++i) {
            Integer sum = 0;
            for (unsigned k = 0; k <= 12; ++k) {
                sum += stirling_first(j, k) * stirling_second(k, i);
            }
            CHECK(sum == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("factorials and binomials")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(rising_factorial(3, 4) == 3 * 4 * 5 * 6);
    CHECK(falling_factorial(6, 3) == 6 * 5 * 4);
    CHECK(rising_factorial(7, 0) == 1);
}

TEST_CASE("divided differences")
{
    const std::vector<Rational> knots{0, q(1, 2), 1};
    const std::vector<Rational> values{0, q(1, 4), 1};
    CHECK(divided_difference(knots, values) == 1);
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned m = 0; m <= 7; ++m) {
            for (unsigned j = 0; j <= 7; ++j) {
                std::vector<Rational> k;
                std::vector<Rational> v;
                for (unsigned i = 0; i <= j; ++i) {
                    k.push_back(q(i, n));
                    v.push_back(pow(k.back(), m));
                }
                const Rational expected = Rational(stirling_second(m, j)) * pow(Rational(n), j) / pow(Rational(n), m);
                CHECK(divided_difference(k, v) == expected);
            }
        }
    }
    const std::vector<Rational> repeated{0, 0};
    const std::vector<Rational> two{0, 1};
    CHECK_THROWS_AS(divided_difference(repeated, two), std::invalid_argument);
    CHECK_THROWS_AS(divided_difference(knots, two), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic")
{
    const Polynomial p{0, q(-1, 2), q(3, 2), -1}; // x(x-1)(x-1/2) negated
    CHECK((-p)(q(1, 4)) == q(3, 64));
    CHECK(derivative(Polynomial::monomial(3), 3) == Polynomial::constant(6));
    CHECK(definite_integral(Polynomial{0, 1, -1}, 0, 1) == q(1, 6));
    CHECK(Polynomial{}.is_zero());
    CHECK(!Polynomial{}.degree().has_value());
    CHECK(Polynomial{1, 2, 0, 0}.degree() == 1u);
    CHECK(reflect(Polynomial::x()) == Polynomial{1, -1});
    CHECK(compose(Polynomial::monomial(2), Polynomial{1, 1}) == Polynomial{1, 2, 1});
    CHECK(padded_coefficients(Polynomial{1, 2}, 4) == std::vector<Rational>{1, 2, 0, 0});
}

TEST_CASE("polynomial ring properties on random inputs")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial a = random_polynomial(rng, trial % 7);
        const Polynomial b = random_polynomial(rng, (trial * 3) % 5);
        const Polynomial c = random_polynomial(rng, 2);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
        CHECK(derivative(antiderivative(a)) == a);
        CHECK(reflect(reflect(a)) == a);
        const Rational t = q(trial - 30, 7);
        CHECK((a * b)(t) == a(t) * b(t));
        CHECK(compose(a, c)(t) == a(c(t)));
        CHECK(a - a == Polynomial{});
    }
}

TEST_CASE("rational matrix inverse on random inputs")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    int inverted = 0;
    for (std::size_t size = 1; size <= 12; ++size) {
        RationalMatrix m(size, size);
        for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t c = 0; c < size; ++c) {
                m(r, c) = q(num(rng), den(rng));
            }
        }
        try {
            const RationalMatrix inv = inverse(m);
            CHECK(inv * m == RationalMatrix::identity(size));
            ++inverted;
        } catch (const SingularMatrixError&) {
        }
    }
    CHECK(inverted >= 10);
    RationalMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK_THROWS_AS(inverse(singular), SingularMatrixError);
}
