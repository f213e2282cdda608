#pragma once

// Dense exact linear algebra over a field (Rational or GaussianRational).
// Elimination is exact, so pivot selection only needs a nonzero entry.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "currents/errors.hpp"
#include "currents/exact.hpp"

namespace currents {

template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    T trace() const {
        T s{};
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    bool is_symmetric() const {
        if (!square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if (!((*this)(r, c) == (*this)(c, r))) return false;
        return true;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
        DenseMatrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
            }
        return p;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shapes differ");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend DenseMatrix operator*(const T& s, DenseMatrix a) {
        for (auto& x : a.data_) x = s * x;
        return a;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
struct RowEchelon {
    DenseMatrix<T> reduced;            // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form. Only the first `pivot_cols` columns are used as
/// pivot candidates (defaults to all), which lets callers reduce an augmented
/// matrix [A | B] in one pass.
template <typename T>
RowEchelon<T> row_reduce(DenseMatrix<T> m, std::optional<std::size_t> pivot_cols = std::nullopt) {
    const std::size_t limit = pivot_cols.value_or(m.cols());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const T inv = T(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const T factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <typename T>
std::size_t rank(const DenseMatrix<T>& m) {
    return row_reduce(m).pivots.size();
}

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
template <typename T>
std::vector<std::vector<T>> null_space(const DenseMatrix<T>& m) {
    const auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols());
        v[free] = T(1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves A X = B for every column of B at once. Returns std::nullopt for
/// the columns whose system is inconsistent. A must have full column rank.
template <typename T>
std::vector<std::optional<std::vector<T>>> solve_columns(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
    DenseMatrix<T> aug(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
    }
    const auto ech = row_reduce(std::move(aug), a.cols());
    if (ech.pivots.size() != a.cols()) throw InvalidArgument("solve: coefficient matrix is rank deficient");

    std::vector<std::optional<std::vector<T>>> out;
    out.reserve(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const std::size_t col = a.cols() + j;
        bool consistent = true;
        for (std::size_t r = ech.pivots.size(); r < a.rows(); ++r)
            if (!is_zero(ech.reduced(r, col))) { consistent = false; break; }
        if (!consistent) {
            out.emplace_back(std::nullopt);
            continue;
        }
        std::vector<T> x(a.cols());
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, col);
        out.emplace_back(std::move(x));
    }
    return out;
}

}  // namespace currents
