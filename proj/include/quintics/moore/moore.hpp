#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintics/heisenberg/group.hpp"
#include "quintics/poly/multipoly.hpp"
#include "quintics/poly/poly_matrix.hpp"

namespace quintics {

inline int mod5(long i) { return static_cast<int>(((i % 5) + 5) % 5); }

/// An affine reindexing j -> m j + d of Z/5.
struct Reindexing {
    int m = 1;
    int d = 0;
    int operator()(long j) const { return mod5(m * j + d); }
    std::string to_string() const {
        std::string s = m == 1 ? "j" : std::to_string(m) + "j";
        return d == 0 ? s : s + "+" + std::to_string(d);
    }
    friend bool operator==(const Reindexing&, const Reindexing&) = default;
};

/// The 20 affine reindexings of Z/5, the identity first.
inline std::vector<Reindexing> all_reindexings() {
    std::vector<Reindexing> out;
    for (int m : {1, 2, 3, 4})
        for (int d = 0; d < 5; ++d) out.push_back({m, d});
    return out;
}

/// Quadrics through the H5-invariant elliptic normal quintic with modulus a, the Moore
/// matrix M(y), the dual matrix M'(x) and the syzygy matrix A.
///
/// With `clear_denominators` every object except A is multiplied by a, so the entries are
/// polynomial in a; all identities checked here are homogeneous in that factor.
template <Field K>
class MooreSystem {
public:
    MooreSystem(const K& a, bool clear_denominators)
        : a_(a), scale_(clear_denominators ? a : K::one(a.context())), x_(make_ring<K>("x", 5, a.context())),
          y_(make_ring<K>("y", 5, a.context())), m_(y_, 5, 5), mp_(x_, 5, 5), a_mat_(x_, 5, 5) {
        if (a.is_zero()) throw std::invalid_argument("the modulus a must be nonzero");
        const K inv = a.inverse();
        z_ = {K::from_int(a.context(), 2) * scale_, a * scale_, -(inv * scale_)};
        build_quadrics();
        build_moore();
        build_dual();
        build_syzygy_matrix();
    }

    const K& a() const { return a_; }
    const K& scale() const { return scale_; }
    const RingPtr<K>& x_ring() const { return x_; }
    const RingPtr<K>& y_ring() const { return y_; }
    /// scale * Q_i with Q_i = x_i^2 + a x_{i+2} x_{i+3} - (1/a) x_{i+1} x_{i+4}.
    const std::vector<MultiPoly<K>>& quadrics() const { return q_; }
    /// scale * z_k, z_0 = 2, z_{+-1} = a, z_{+-2} = -1/a.
    const K& z(long k) const {
        const int r = mod5(k);
        return z_[static_cast<std::size_t>(r <= 2 ? r : 5 - r)];
    }
    const PolyMatrix<K>& moore() const { return m_; }
    const PolyMatrix<K>& dual() const { return mp_; }
    const PolyMatrix<K>& syzygy() const { return a_mat_; }

    /// Jacobian (d Q_{r(j)} / d x_i)_{i,j}.
    PolyMatrix<K> jacobian(const Reindexing& r = {3, 0}) const {
        PolyMatrix<K> j(x_, 5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t c = 0; c < 5; ++c) j(i, c) = q_[static_cast<std::size_t>(r(static_cast<long>(c)))].partial_derivative(i);
        return j;
    }

    /// x M(e_i) x^T as a quadric in x.
    MultiPoly<K> quadratic_form(std::size_t i) const {
        std::vector<K> e(5, K::zero(a_.context()));
        e[i] = K::one(a_.context());
        const Matrix<K> m = m_.evaluate(e);
        MultiPoly<K> f(x_);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 5; ++c) {
                if (m(r, c).is_zero()) continue;
                f += (MultiPoly<K>::variable(x_, r) * MultiPoly<K>::variable(x_, c)).scaled(m(r, c));
            }
        return f;
    }

    /// M(y) at a point, from the closed form.
    Matrix<K> moore_at(std::span<const K> y) const {
        Matrix<K> m(5, 5, a_.context());
        for (long i = 0; i < 5; ++i)
            for (long j = 0; j < 5; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = y[static_cast<std::size_t>(mod5(i + j))] * z(i - j);
        return m;
    }
    /// M'(x) at a point: entry (i, k) is z_{2i-k} x_{k-i}.
    Matrix<K> dual_at(std::span<const K> x) const {
        Matrix<K> m(5, 5, a_.context());
        for (long i = 0; i < 5; ++i)
            for (long k = 0; k < 5; ++k) m(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = z(2 * i - k) * x[static_cast<std::size_t>(mod5(k - i))];
        return m;
    }

private:
    void build_quadrics() {
        const K inv_scaled = a_.inverse() * scale_;
        auto v = [&](long i) { return MultiPoly<K>::variable(x_, static_cast<std::size_t>(mod5(i))); };
        for (long i = 0; i < 5; ++i) {
            q_.push_back((v(i) * v(i)).scaled(scale_) + (v(i + 2) * v(i + 3)).scaled(a_ * scale_) - (v(i + 1) * v(i + 4)).scaled(inv_scaled));
        }
    }

    void build_moore() {
        for (long i = 0; i < 5; ++i)
            for (long j = 0; j < 5; ++j) {
                m_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    MultiPoly<K>::variable(y_, static_cast<std::size_t>(mod5(i + j))).scaled(z(i - j));
            }
    }

    // M'(x) y^T = M(y) x^T: expand M(y) x^T in the joint ring and read off the y-coefficients.
    void build_dual() {
        const auto xy = make_ring<K>(std::vector<std::string>{"x0", "x1", "x2", "x3", "x4", "y0", "y1", "y2", "y3", "y4"}, a_.context());
        std::vector<MultiPoly<K>> y_in_xy;
        for (std::size_t k = 0; k < 5; ++k) y_in_xy.push_back(MultiPoly<K>::variable(xy, 5 + k));
        for (std::size_t i = 0; i < 5; ++i) {
            MultiPoly<K> row(xy);
            for (std::size_t j = 0; j < 5; ++j) row += m_(i, j).substitute(y_in_xy) * MultiPoly<K>::variable(xy, j);
            for (const auto& [mono, c] : row.terms()) {
                std::size_t y_index = 5;
                Monomial xm{};
                for (std::size_t v = 0; v < 5; ++v) xm.e[v] = mono.e[v];
                for (std::size_t v = 5; v < 10; ++v) {
                    if (mono.e[v] == 0) continue;
                    if (mono.e[v] != 1 || y_index != 5) throw std::logic_error("M(y) x^T is not bilinear");
                    y_index = v - 5;
                }
                if (y_index == 5) throw std::logic_error("M(y) x^T has a term free of y");
                mp_(i, y_index).add_term(xm, c);
            }
        }
    }

    void build_syzygy_matrix() {
        const K one = K::one(a_.context());
        auto v = [&](int i, const K& c) { return MultiPoly<K>::variable(x_, static_cast<std::size_t>(i)).scaled(c); };
        const K& a = a_;
        const K m1 = -one, ma = -a;
        // rows as displayed
        const std::array<std::array<std::optional<MultiPoly<K>>, 5>, 5> rows{{
            {std::nullopt, v(4, a), v(3, m1), v(2, one), v(1, ma)},
            {v(4, ma), std::nullopt, v(2, a), v(1, m1), v(0, one)},
            {v(3, one), v(2, ma), std::nullopt, v(0, a), v(4, m1)},
            {v(2, m1), v(1, one), v(0, ma), std::nullopt, v(3, a)},
            {v(1, a), v(0, m1), v(4, one), v(3, ma), std::nullopt},
        }};
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) a_mat_(i, j) = rows[i][j] ? *rows[i][j] : MultiPoly<K>(x_);
    }

    K a_;
    K scale_;
    RingPtr<K> x_, y_;
    std::array<K, 3> z_;
    std::vector<MultiPoly<K>> q_;
    PolyMatrix<K> m_, mp_, a_mat_;
};

/// det M(y) and det M'(x).
template <Field K>
std::pair<MultiPoly<K>, MultiPoly<K>> quintic_equations(const MooreSystem<K>& ms) {
    return {determinant_cofactor(ms.moore()), determinant_cofactor(ms.dual())};
}

/// M(y) x^T; throws std::logic_error if it differs from M'(x) y^T.
template <Field K>
std::array<K, 5> incidence_residual(const MooreSystem<K>& ms, std::span<const K> x, std::span<const K> y) {
    auto nonzero = [](std::span<const K> v) {
        for (const auto& c : v)
            if (!c.is_zero()) return true;
        return false;
    };
    if (x.size() != 5 || y.size() != 5) throw std::invalid_argument("incidence points live in P^4");
    if (!nonzero(x) || !nonzero(y)) throw std::invalid_argument("incidence needs nonzero points");
    const auto lhs = ms.moore_at(y).apply(x);
    const auto rhs = ms.dual_at(x).apply(y);
    if (lhs != rhs) throw std::logic_error("M(y) x^T and M'(x) y^T disagree");
    return {lhs[0], lhs[1], lhs[2], lhs[3], lhs[4]};
}

}  // namespace quintics
