#pragma once

#include "bdecomp/polynomial.hpp"
#include "bdecomp/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bdecomp {

/// Row-major dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix diagonal(std::span<const Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Rational> values);

    /// True when every entry below the diagonal is zero.
    bool is_upper_triangular() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact product; zero entries are skipped. Throws std::invalid_argument on
/// a dimension mismatch.
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> v);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

/// Gauss-Jordan elimination over Q. Throws SingularMatrixError.
RationalMatrix inverse(const RationalMatrix& m);

} // namespace bdecomp
