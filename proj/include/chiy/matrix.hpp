#pragma once

// Small dense matrices over the rationals with exact elimination.

#include "chiy/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chiy {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n)
    {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix shape mismatch");
        RationalMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact inverse by Gauss-Jordan elimination; nullopt if singular.
inline std::optional<RationalMatrix> inverse(RationalMatrix a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        Rational scale = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero())
                continue;
            Rational f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(col, j).is_zero())
                    a(r, j) -= f * a(col, j);
                if (!inv(col, j).is_zero())
                    inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Exact determinant by fraction-carrying elimination.
inline Rational determinant(RationalMatrix a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return Rational();
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        Rational inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero())
                continue;
            Rational f = a(r, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

/// Some exact solution x of a x = b (free variables set to zero), or
/// nullopt when the system is inconsistent. Works for any shape.
inline std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("right-hand side length mismatch");
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(pivot, j), a(row, j));
            std::swap(b[pivot], b[row]);
        }
        Rational scale = a(row, col).inverse();
        for (std::size_t j = col; j < cols; ++j)
            a(row, j) *= scale;
        b[row] *= scale;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a(r, col).is_zero())
                continue;
            Rational f = a(r, col);
            for (std::size_t j = col; j < cols; ++j)
                a(r, j) -= f * a(row, j);
            b[r] -= f * b[row];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (!b[r].is_zero())
            return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
        x[pivot_cols[r]] = b[r];
    return x;
}

} // namespace chiy
