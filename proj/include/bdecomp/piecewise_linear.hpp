#pragma once

#include "bdecomp/rational.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bdecomp {

/// Continuous piecewise-linear function on the knots i/n, i = 0..n.
/// Instantiated for double and Rational; with Rational, evaluation at rational
/// points is exact.
template <class T>
class BasicPiecewiseLinear {
public:
    BasicPiecewiseLinear(unsigned n, std::vector<T> values) : n_(n), values_(std::move(values))
    {
        if (n == 0 || values_.size() != static_cast<std::size_t>(n) + 1) {
            throw std::invalid_argument("piecewise linear: need n >= 1 and n + 1 knot values");
        }
    }

    /// S_n f: the interpolant of f at the knots.
    static BasicPiecewiseLinear interpolate(const std::function<T(const T&)>& f, unsigned n)
    {
        std::vector<T> v;
        v.reserve(n + 1);
        for (unsigned i = 0; i <= n; ++i) {
            v.push_back(f(T(i) / T(n)));
        }
        return BasicPiecewiseLinear(n, std::move(v));
    }

    /// u_{n,i}: 1 at knot i, 0 at the other knots.
    static BasicPiecewiseLinear hat(unsigned n, unsigned i)
    {
        if (i > n) {
            throw std::invalid_argument("hat: index beyond n");
        }
        std::vector<T> v(n + 1, T(0));
        v[i] = T(1);
        return BasicPiecewiseLinear(n, std::move(v));
    }

    unsigned n() const { return n_; }
    const std::vector<T>& values() const { return values_; }

    /// Clamped to [0, 1].
    T operator()(const T& x) const
    {
        if (!(x > T(0))) {
            return values_.front();
        }
        if (!(x < T(1))) {
            return values_.back();
        }
        const T scaled = x * T(n_);
        std::size_t cell = segment(scaled);
        if (cell >= n_) {
            cell = n_ - 1;
        }
        const T local = scaled - T(static_cast<unsigned>(cell));
        return values_[cell] + (values_[cell + 1] - values_[cell]) * local;
    }

private:
    static std::size_t segment(const T& scaled);

    unsigned n_;
    std::vector<T> values_;
};

template <>
inline std::size_t BasicPiecewiseLinear<double>::segment(const double& scaled)
{
    return static_cast<std::size_t>(scaled);
}

template <>
inline std::size_t BasicPiecewiseLinear<Rational>::segment(const Rational& scaled)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return q.get_ui();
}

using PiecewiseLinear = BasicPiecewiseLinear<double>;
using ExactPiecewiseLinear = BasicPiecewiseLinear<Rational>;

} // namespace bdecomp
