#include "bdecomp/rational_matrix.hpp"

#include "bdecomp/errors.hpp"

#include <stdexcept>
#include <utility>

namespace bdecomp {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> entries)
{
    RationalMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const
{
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

void RationalMatrix::set_column(std::size_t c, std::span<const Rational> values)
{
    if (values.size() != rows_) {
        throw std::invalid_argument("column length mismatch");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = values[r];
    }
}

bool RationalMatrix::is_upper_triangular() const
{
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < r && c < cols_; ++c) {
            if (sgn((*this)(r, c)) != 0) {
                return false;
            }
        }
    }
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: dimension mismatch");
    }
    RationalMatrix out(a.rows(), b.cols());
    Rational term;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b(k, j);
                if (sgn(bkj) == 0) {
                    continue;
                }
                term = aik * bkj;
                out(i, j) += term;
            }
        }
    }
    return out;
}

std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> v)
{
    if (a.cols() != v.size()) {
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    }
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(v[k]) != 0 && sgn(a(i, k)) != 0) {
                out[i] += a(i, k) * v[k];
            }
        }
    }
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix difference: dimension mismatch");
    }
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c) - b(r, c);
        }
    }
    return out;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("inverse: matrix is not square");
    }
    const std::size_t n = m.rows();
    RationalMatrix work = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        // Over Q any nonzero pivot is exact; prefer the one with the
        // smallest denominator to keep entry growth down.
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (sgn(work(r, col)) == 0) {
                continue;
            }
            if (pivot == n || cmp(work(r, col).get_den(), work(pivot, col).get_den()) < 0) {
                pivot = r;
            }
        }
        if (pivot == n) {
            throw SingularMatrixError();
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work(pivot, c), work(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const Rational scale = 1 / work(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            if (sgn(work(col, c)) != 0) {
                work(col, c) *= scale;
            }
            if (sgn(inv(col, c)) != 0) {
                inv(col, c) *= scale;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(work(r, col)) == 0) {
                continue;
            }
            const Rational factor = work(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                if (sgn(work(col, c)) != 0) {
                    work(r, c) -= factor * work(col, c);
                }
                if (sgn(inv(col, c)) != 0) {
                    inv(r, c) -= factor * inv(col, c);
                }
            }
        }
    }
    return inv;
}

} // namespace bdecomp
