#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "quintics/poly/linalg.hpp"
#include "quintics/poly/multipoly.hpp"
#include "quintics/scalars/rational_function.hpp"

namespace quintics {

template <class K>
struct is_rational_function : std::false_type {};
template <Field B>
struct is_rational_function<RationalFunction<B>> : std::true_type {};

/// Rectangular matrix of polynomials over one ring.
template <Field K>
class PolyMatrix {
public:
    using Poly = MultiPoly<K>;

    PolyMatrix(RingPtr<K> ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring_)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingPtr<K>& ring() const { return ring_; }
    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    PolyMatrix transpose() const {
        PolyMatrix t(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    PolyMatrix operator*(const PolyMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
        PolyMatrix r(ring_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) {
                Poly acc(ring_);
                for (std::size_t k = 0; k < cols_; ++k) acc += (*this)(i, k) * o(k, j);
                r(i, j) = std::move(acc);
            }
        return r;
    }
    PolyMatrix operator+(const PolyMatrix& o) const { return combine(o, 1); }
    PolyMatrix operator-(const PolyMatrix& o) const { return combine(o, -1); }
    PolyMatrix operator-() const {
        PolyMatrix r = *this;
        for (auto& e : r.data_) e = -e;
        return r;
    }
    bool is_zero() const {
        for (const auto& e : data_) {
            if (!e.is_zero()) return false;
        }
        return true;
    }

    Matrix<K> evaluate(std::span<const K> point) const {
        Matrix<K> m(rows_, cols_, ring_->ctx);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
        return m;
    }

    /// Applies a polynomial map to every entry (e.g. a substitution).
    template <class Fn>
    PolyMatrix map(RingPtr<K> target, Fn&& fn) const {
        PolyMatrix r(std::move(target), rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = fn(data_[k]);
        return r;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    PolyMatrix combine(const PolyMatrix& o, int sign) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
        PolyMatrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = sign > 0 ? data_[k] + o.data_[k] : data_[k] - o.data_[k];
        return r;
    }

    RingPtr<K> ring_;
    std::size_t rows_, cols_;
    std::vector<Poly> data_;
};

inline constexpr std::size_t kMaxDeterminantSize = 6;

/// Laplace expansion along rows, memoized on the set of remaining columns.
template <Field K>
MultiPoly<K> determinant_cofactor(const PolyMatrix<K>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n > kMaxDeterminantSize) throw std::invalid_argument("determinant size above supported bound");
    // minors[mask] = det of the submatrix on the last popcount(mask) rows and the columns in mask
    std::vector<std::optional<MultiPoly<K>>> minors(std::size_t{1} << n);
    minors[0] = MultiPoly<K>::constant(m.ring(), K::one(m.ring()->ctx));
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
        const std::size_t row = n - k;
        MultiPoly<K> acc(m.ring());
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (std::size_t{1} << c))) continue;
            const auto& entry = m(row, c);
            const auto& sub = *minors[mask & ~(std::size_t{1} << c)];
            if (!entry.is_zero() && !sub.is_zero()) {
                acc = sign > 0 ? acc + entry * sub : acc - entry * sub;
            }
            sign = -sign;
        }
        minors[mask] = std::move(acc);
    }
    return *minors.back();
}

/// Fraction-free Bareiss elimination; every division is exact.
template <Field K>
MultiPoly<K> determinant_bareiss(const PolyMatrix<K>& input) {
    const std::size_t n = input.rows();
    if (n != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n > kMaxDeterminantSize) throw std::invalid_argument("determinant size above supported bound");
    PolyMatrix<K> m = input;
    MultiPoly<K> prev = MultiPoly<K>::constant(m.ring(), K::one(m.ring()->ctx));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k).is_zero()) ++piv;
            if (piv == n) return MultiPoly<K>(m.ring());
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                auto q = num.divide_exact(prev);
                if (!q) throw std::logic_error("Bareiss step produced an inexact division");
                m(i, j) = std::move(*q);
            }
            m(i, k) = MultiPoly<K>(m.ring());
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Exact determinant; Bareiss over rational-function coefficients, cofactor otherwise.
template <Field K>
MultiPoly<K> determinant(const PolyMatrix<K>& m) {
    if constexpr (is_rational_function<K>::value) return determinant_bareiss(m);
    else return determinant_cofactor(m);
}

/// Rank of m evaluated at a nonzero point.
template <Field K>
std::size_t rank_at_point(const PolyMatrix<K>& m, std::span<const K> point) {
    bool nonzero = false;
    for (const auto& x : point) nonzero = nonzero || !x.is_zero();
    if (!nonzero) throw std::invalid_argument("rank_at_point needs a nonzero point");
    return m.evaluate(point).rank();
}

/// Coefficients c with q = sum c_i basis_i, or nullopt if q is outside the span.
template <Field K>
std::optional<std::vector<K>> in_linear_span(const MultiPoly<K>& q, const std::vector<MultiPoly<K>>& basis) {
    if (basis.empty()) throw std::invalid_argument("empty spanning set");
    const auto& ctx = basis.front().ring()->ctx;
    int degree = -1;
    auto check = [&degree](const MultiPoly<K>& f) {
        if (f.is_zero()) return;
        if (!f.is_homogeneous()) throw std::invalid_argument("span membership needs homogeneous polynomials");
        if (degree >= 0 && f.degree() != degree) throw std::invalid_argument("span membership degree mismatch");
        degree = f.degree();
    };
    for (const auto& b : basis) check(b);
    check(q);
    std::map<Monomial, std::size_t, GrevlexLess> index;
    for (const auto& b : basis)
        for (const auto& t : b.terms()) index.try_emplace(t.first, index.size());
    for (const auto& t : q.terms()) {
        if (!index.count(t.first)) return std::nullopt;
    }
    Matrix<K> a(index.size(), basis.size(), ctx);
    std::vector<K> rhs(index.size(), K::zero(ctx));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [mono, c] : basis[j].terms()) a(index.at(mono), j) = c;
    for (const auto& [mono, c] : q.terms()) rhs[index.at(mono)] = c;
    return a.solve(rhs);
}

}  // namespace quintics
