#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quintics/poly/multipoly.hpp"
#include "quintics/scalars/field.hpp"

namespace quintics {

template <Field K>
using PlaneCoords = std::array<K, 3>;

/// Scales a nonzero triple so that its first nonzero entry is 1.
template <Field K>
PlaneCoords<K> normalize_plane(const PlaneCoords<K>& p) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!p[i].is_zero()) {
            const K inv = p[i].inverse();
            return {p[0] * inv, p[1] * inv, p[2] * inv};
        }
    }
    throw std::invalid_argument("the zero vector is not a projective point");
}

/// Homogeneous cubic in x0, x1, x2 with a chosen inflection point as origin of
/// the chord-tangent group law.
template <Field K>
class PlaneCubic {
public:
    using Point = PlaneCoords<K>;

    /// Coefficient of x0^i x1^j x2^k for each of the ten cubic monomials.
    struct Term {
        std::array<int, 3> e;
        K c;
    };

    PlaneCubic(const typename K::Context& ctx, std::vector<Term> terms, const Point& origin)
        : ctx_(ctx), terms_(std::move(terms)), origin_(normalize_plane(origin)) {
        for (const auto& t : terms_) {
            if (t.e[0] + t.e[1] + t.e[2] != 3) throw std::invalid_argument("plane cubic term of wrong degree");
        }
        if (!contains(origin_)) throw std::invalid_argument("origin does not lie on the cubic");
        if (!is_flex(origin_)) throw std::invalid_argument("origin is not an inflection point");
    }

    /// The Hesse member x0^3 + x1^3 + x2^3 + lambda x0 x1 x2 with origin (0, 1, -1).
    static PlaneCubic hesse(const K& lambda) {
        const auto ctx = lambda.context();
        const K one = K::one(ctx), zero = K::zero(ctx);
        std::vector<Term> t{{{3, 0, 0}, one}, {{0, 3, 0}, one}, {{0, 0, 3}, one}, {{1, 1, 1}, lambda}};
        PlaneCubic c(ctx, std::move(t), {zero, one, -one});
        c.hesse_ = true;
        return c;
    }

    /// Builds a cubic from a homogeneous MultiPoly in three variables.
    static PlaneCubic from_poly(const MultiPoly<K>& f, const Point& origin) {
        if (f.ring()->size() != 3 || !f.is_homogeneous() || f.degree() != 3) throw std::invalid_argument("not a plane cubic");
        std::vector<Term> t;
        for (const auto& [m, c] : f.terms()) t.push_back({{m.e[0], m.e[1], m.e[2]}, c});
        return PlaneCubic(f.ring()->ctx, std::move(t), origin);
    }

    const typename K::Context& context() const { return ctx_; }
    const Point& origin() const { return origin_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_hesse() const { return hesse_; }

    K evaluate(const Point& p) const {
        K acc = K::zero(ctx_);
        for (const auto& t : terms_) acc = acc + t.c * power(p[0], t.e[0]) * power(p[1], t.e[1]) * power(p[2], t.e[2]);
        return acc;
    }
    bool contains(const Point& p) const { return evaluate(p).is_zero(); }

    std::array<K, 3> gradient(const Point& p) const {
        std::array<K, 3> g{K::zero(ctx_), K::zero(ctx_), K::zero(ctx_)};
        for (const auto& t : terms_) {
            for (std::size_t v = 0; v < 3; ++v) {
                if (t.e[v] == 0) continue;
                auto e = t.e;
                const long k = e[v]--;
                g[v] = g[v] + t.c * K::from_int(ctx_, k) * power(p[0], e[0]) * power(p[1], e[1]) * power(p[2], e[2]);
            }
        }
        return g;
    }
    bool is_singular_at(const Point& p) const {
        const auto g = gradient(p);
        return contains(p) && g[0].is_zero() && g[1].is_zero() && g[2].is_zero();
    }

    /// Third intersection of the line through P and Q (the tangent when P = Q),
    /// by exact division of the cubic restricted to that line.
    Point third_point(const Point& P, const Point& Q) const {
        require_on_curve(P);
        require_on_curve(Q);
        const Point a = normalize_plane(P), b0 = normalize_plane(Q);
        Point b = b0;
        int known_at_b = 1;  // multiplicity of the root at b already known
        if (a == b0) {
            const auto g = gradient(a);
            if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero()) throw std::domain_error("tangent at a singular point");
            b = other_point_on_line(g, a);
            known_at_b = 0;
        }
        // binary cubic F(s a + t b) = c[0] s^3 + c[1] s^2 t + c[2] s t^2 + c[3] t^3
        const auto c = restrict_to_line(a, b);
        // divide out the known root (1:0) at a, twice in the tangent case, and (0:1) at b;
        // the residual linear form u s + v t vanishes at (s:t) = (v:-u)
        const int known_at_a = known_at_b == 1 ? 1 : 2;
        for (int r = 0; r < known_at_a; ++r) {
            if (!c[r].is_zero()) throw std::logic_error("expected root at the first point");
        }
        if (known_at_b == 1 && !c[3].is_zero()) throw std::logic_error("expected root at the second point");
        const K& u = c[known_at_a];
        const K& v = c[known_at_a + 1];
        if (u.is_zero() && v.is_zero()) throw std::domain_error("line lies on the cubic");
        return normalize_plane(Point{v * a[0] - u * b[0], v * a[1] - u * b[1], v * a[2] - u * b[2]});
    }

    Point negate(const Point& P) const {
        if (hesse_) {
            require_on_curve(P);
            return normalize_plane(Point{P[0], P[2], P[1]});
        }
        return third_point(P, origin_);
    }

    /// Negation by the chord construction only, used to validate the closed form.
    Point negate_by_chord(const Point& P) const { return third_point(P, origin_); }

    Point add(const Point& P, const Point& Q) const { return third_point(third_point(P, Q), origin_); }

    Point multiply(long n, const Point& P) const {
        Point base = n < 0 ? negate(P) : normalize_plane(P);
        unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
        Point acc = origin_;
        while (k > 0) {
            if (k & 1u) acc = add(acc, base);
            k >>= 1u;
            if (k) base = add(base, base);
        }
        return acc;
    }

    std::string to_string() const {
        std::string out;
        const char* names[3] = {"x0", "x1", "x2"};
        for (const auto& t : terms_) {
            if (t.c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + t.c.to_string() + ")";
            for (std::size_t v = 0; v < 3; ++v) {
                if (t.e[v] == 0) continue;
                out += std::string("*") + names[v] + (t.e[v] > 1 ? "^" + std::to_string(t.e[v]) : "");
            }
        }
        return out;
    }

private:
    static K power(const K& x, int e) {
        K r = K::one(x.context());
        for (int i = 0; i < e; ++i) r = r * x;
        return r;
    }

    void require_on_curve(const Point& p) const {
        if (!contains(p)) throw std::invalid_argument("point is not on the cubic");
    }

    bool is_flex(const Point& p) const {
        const auto g = gradient(p);
        if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero()) return false;
        const Point b = other_point_on_line(g, p);
        auto c = restrict_to_line(p, b);
        return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
    }

    // A point on the line g.x = 0 different from a.
    Point other_point_on_line(const std::array<K, 3>& g, const Point& a) const {
        const K zero = K::zero(ctx_);
        // the three cross products of g with the unit vectors span the line
        const std::array<Point, 3> candidates{Point{zero, -g[2], g[1]}, Point{g[2], zero, -g[0]}, Point{-g[1], g[0], zero}};
        for (const auto& c : candidates) {
            if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
            if (normalize_plane(c) != a) return normalize_plane(c);
        }
        throw std::logic_error("degenerate line");
    }

    std::array<K, 4> restrict_to_line(const Point& a, const Point& b) const {
        const K zero = K::zero(ctx_);
        std::array<K, 4> c{zero, zero, zero, zero};
        for (const auto& t : terms_) {
            // product over the three coordinates of (s a_v + t b_v)^{e_v}
            std::array<K, 4> poly{t.c, zero, zero, zero};
            std::size_t len = 1;
            for (std::size_t v = 0; v < 3; ++v) {
                for (int r = 0; r < t.e[v]; ++r) {
                    for (std::size_t k = len; k-- > 0;) {
                        poly[k + 1] = poly[k + 1] + poly[k] * b[v];
                        poly[k] = poly[k] * a[v];
                    }
                    ++len;
                }
            }
            for (std::size_t k = 0; k < 4; ++k) c[k] = c[k] + poly[k];
        }
        return c;
    }

    typename K::Context ctx_;
    std::vector<Term> terms_;
    Point origin_;
    bool hesse_ = false;
};

/// A point together with the cubic it lies on.
template <Field K>
struct CubicCurvePoint {
    const PlaneCubic<K>* curve = nullptr;
    PlaneCoords<K> coords;

    CubicCurvePoint(const PlaneCubic<K>& c, const PlaneCoords<K>& p) : curve(&c), coords(normalize_plane(p)) {
        if (!c.contains(coords)) throw std::invalid_argument("point is not on the cubic");
    }
    friend bool operator==(const CubicCurvePoint& a, const CubicCurvePoint& b) { return a.curve == b.curve && a.coords == b.coords; }
};

template <Field K>
CubicCurvePoint<K> add_points(const CubicCurvePoint<K>& P, const CubicCurvePoint<K>& Q) {
    if (P.curve != Q.curve) throw std::invalid_argument("points lie on different curves");
    return {*P.curve, P.curve->add(P.coords, Q.coords)};
}

}  // namespace quintics
