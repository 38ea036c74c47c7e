#pragma once

#include "pseudolin/arith.hpp"
#include "pseudolin/error.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pseudolin {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries))
    {
        if (e_.size() != rows * cols) throw Error("matrix entry count does not match dimensions");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<T>& entries() const { return e_; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> e_;
};

using PolyMatrix = Matrix<Poly>;
using RatMatrix = Matrix<RatFun>;

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum: dimension mismatch");
    Matrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix difference: dimension mismatch");
    Matrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows()) throw Error("matrix product: dimension mismatch");
    Matrix<T> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v)
{
    if (a.cols() != v.size()) throw Error("matrix-vector product: dimension mismatch");
    std::vector<T> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    return r;
}

template <class T>
Matrix<T> scaled(const Matrix<T>& a, const T& s)
{
    Matrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) * s;
    return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a)
{
    Matrix<T> r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

/// Block (i, j) of the result is A[i, j] * B.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

/// Block-diagonal matrix from square or rectangular blocks.
template <class T>
Matrix<T> block_diagonal(const std::vector<Matrix<T>>& blocks)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix<T> r(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return r;
}

RatMatrix to_rat(const PolyMatrix& m);

/// Determinant by fraction-free elimination; throws Error unless square.
Poly det_fraction_free(const PolyMatrix& m);
RatFun det(const RatMatrix& m);
/// Inverse over Q(x); throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);

/// Unique solution of A v = b when consistent, nullopt when inconsistent.
/// Throws DomainError if the columns of A are dependent.
std::optional<std::vector<RatFun>> solve_rational(const RatMatrix& a, const std::vector<RatFun>& b);
std::size_t rank(const RatMatrix& a);

/// phi_l(R): monic lcm of the denominators of all minors of order <= l.
/// Enumerates every minor, so only meant for small matrices.
Poly det_denominator(const RatMatrix& r, std::size_t l);
/// phi_0, ..., phi_l in one pass.
std::vector<Poly> det_denominators(const RatMatrix& r, std::size_t l);

/// r x r companion matrix: ones on the subdiagonal, last column -coeffs[j]/lead.
RatMatrix companion(const std::vector<RatFun>& coeffs, const RatFun& lead);

/// Sylvester matrix of a and b in y (rows of a first, highest power leftmost).
PolyMatrix sylvester_matrix(const BiPoly& a, const BiPoly& b);

/// Monic lcm of all entry denominators.
Poly common_denominator(const RatMatrix& m);

} // namespace pseudolin
