#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quintics/scalars/field.hpp"

namespace quintics {

/// Dense row-major matrix over a field with exact elimination routines.
template <Field K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const typename K::Context& ctx = {})
        : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, K::zero(ctx)) {}

    static Matrix identity(std::size_t n, const typename K::Context& ctx = {}) {
        Matrix m(n, n, ctx);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K::one(ctx);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const typename K::Context& context() const { return ctx_; }
    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const K> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Matrix transpose() const {
        Matrix t(cols_, rows_, ctx_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix r(rows_, o.cols_, ctx_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
            }
        return r;
    }

    std::vector<K> apply(std::span<const K> v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector dimension mismatch");
        std::vector<K> out(rows_, K::zero(ctx_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && (*this)(piv, c).is_zero()) ++piv;
            if (piv == rows_) continue;
            swap_rows(r, piv);
            const K inv = (*this)(r, c).inverse();
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                const K f = (*this)(i, c);
                if (f.is_zero()) continue;
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Basis of the right kernel {v : M v = 0}.
    std::vector<std::vector<K>> kernel() const {
        Matrix m = *this;
        const auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(cols_, K::zero(ctx_));
            v[free] = K::one(ctx_);
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Some solution of M v = b, or nullopt when inconsistent.
    std::optional<std::vector<K>> solve(std::span<const K> b) const {
        if (b.size() != rows_) throw std::invalid_argument("right-hand side dimension mismatch");
        Matrix aug(rows_, cols_ + 1, ctx_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        const auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<K> v(cols_, K::zero(ctx_));
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = aug(r, cols_);
        return v;
    }

    /// Determinant by Gaussian elimination.
    K determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
        Matrix m = *this;
        K det = K::one(ctx_);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t piv = c;
            while (piv < rows_ && m(piv, c).is_zero()) ++piv;
            if (piv == rows_) return K::zero(ctx_);
            if (piv != c) {
                m.swap_rows(piv, c);
                det = -det;
            }
            det = det * m(c, c);
            const K inv = m(c, c).inverse();
            for (std::size_t i = c + 1; i < rows_; ++i) {
                const K f = m(i, c) * inv;
                if (f.is_zero()) continue;
                for (std::size_t j = c; j < cols_; ++j) m(i, j) = m(i, j) - f * m(c, j);
            }
        }
        return det;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    typename K::Context ctx_{};
    std::vector<K> data_;
};

}  // namespace quintics
