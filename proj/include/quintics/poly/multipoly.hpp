#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quintics/poly/monomial.hpp"
#include "quintics/scalars/field.hpp"

namespace quintics {

/// Ordered variable names plus the coefficient-field context.
template <Field K>
struct PolyRing {
    std::vector<std::string> names;
    typename K::Context ctx{};

    std::size_t size() const { return names.size(); }
    std::size_t index_of(const std::string& name) const {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw std::invalid_argument("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - names.begin());
    }
    friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.names == b.names && a.ctx == b.ctx; }
};

template <Field K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

/// Ring with variables prefix0 .. prefix{n-1}.
template <Field K>
RingPtr<K> make_ring(const std::string& prefix, std::size_t n, typename K::Context ctx = {}) {
    if (n == 0 || n > kMaxVariables) throw std::invalid_argument("variable count out of range");
    auto r = std::make_shared<PolyRing<K>>();
    for (std::size_t i = 0; i < n; ++i) r->names.push_back(prefix + std::to_string(i));
    r->ctx = std::move(ctx);
    return r;
}

template <Field K>
RingPtr<K> make_ring(std::vector<std::string> names, typename K::Context ctx = {}) {
    if (names.empty() || names.size() > kMaxVariables) throw std::invalid_argument("variable count out of range");
    auto r = std::make_shared<PolyRing<K>>();
    r->names = std::move(names);
    r->ctx = std::move(ctx);
    return r;
}

/// Sparse multivariate polynomial; no zero coefficients are ever stored and
/// terms are kept in grevlex order.
template <Field K>
class MultiPoly {
public:
    using Terms = std::map<Monomial, K, GrevlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(RingPtr<K> ring) : ring_(std::move(ring)) {}

    static MultiPoly constant(RingPtr<K> ring, const K& c) {
        MultiPoly p(std::move(ring));
        if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
        return p;
    }
    static MultiPoly constant(RingPtr<K> ring, long c) {
        const auto ctx = ring->ctx;
        return constant(std::move(ring), K::from_int(ctx, c));
    }
    static MultiPoly variable(RingPtr<K> ring, std::size_t i) {
        if (i >= ring->size()) throw std::invalid_argument("variable index out of range");
        MultiPoly p(ring);
        p.terms_.emplace(Monomial::variable(i), K::one(ring->ctx));
        return p;
    }
    static MultiPoly variable(RingPtr<K> ring, const std::string& name) {
        const std::size_t i = ring->index_of(name);
        return variable(std::move(ring), i);
    }
    static MultiPoly term(RingPtr<K> ring, const Monomial& m, const K& c) {
        MultiPoly p(std::move(ring));
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    const RingPtr<K>& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    K coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K::zero(ring_->ctx) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.begin()->first.degree();
        return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
    }
    /// Largest monomial under grevlex.
    const std::pair<const Monomial, K>& leading_term() const {
        if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
        return *terms_.rbegin();
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_ring(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        check_ring(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        check_ring(o);
        MultiPoly r(ring_);
        for (const auto& [m1, c1] : terms_) {
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const K& s) const {
        MultiPoly r(ring_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * s);
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly result = constant(ring_, K::one(ring_->ctx));
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return result;
    }

    K evaluate(std::span<const K> point) const {
        if (point.size() != ring_->size()) throw std::invalid_argument("point dimension does not match variable count");
        K acc = K::zero(ring_->ctx);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < point.size(); ++i) {
                for (int k = 0; k < m.e[i]; ++k) t = t * point[i];
            }
            acc = acc + t;
        }
        return acc;
    }
    K operator()(std::span<const K> point) const { return evaluate(point); }

    /// Algebra homomorphism sending variable i to images[i]; images share a target ring.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (images.size() != ring_->size()) throw std::invalid_argument("substitution needs one image per variable");
        const RingPtr<K>& target = images.front().ring();
        // cache powers of each image
        std::vector<std::vector<MultiPoly>> powers(images.size());
        MultiPoly acc(target);
        for (const auto& [m, c] : terms_) {
            MultiPoly t = constant(target, c);
            for (std::size_t i = 0; i < images.size(); ++i) {
                if (m.e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(target, K::one(target->ctx)));
                while (pw.size() <= m.e[i]) pw.push_back(pw.back() * images[i]);
                t = t * pw[m.e[i]];
            }
            acc = acc + t;
        }
        return acc;
    }

    /// Formal partial derivative. In characteristic p the degree must stay
    /// below p so that no exponent factor vanishes spuriously.
    MultiPoly partial_derivative(std::size_t var) const {
        if (var >= ring_->size()) throw std::invalid_argument("unknown variable index");
        const std::uint64_t ch = K::characteristic(ring_->ctx);
        if (ch != 0 && static_cast<std::uint64_t>(std::max(degree(), 0)) >= ch) {
            throw std::domain_error("field characteristic too small for the polynomial degree");
        }
        MultiPoly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Monomial dm = m;
            dm.e[var] = static_cast<std::uint8_t>(dm.e[var] - 1);
            r.add_term(dm, c * K::from_int(ring_->ctx, m.e[var]));
        }
        return r;
    }
    MultiPoly partial_derivative(const std::string& name) const { return partial_derivative(ring_->index_of(name)); }

    /// Exact quotient by d, or nullopt when d does not divide this polynomial.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const {
        check_ring(d);
        if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
        const auto& [ld_m, ld_c] = d.leading_term();
        const K ld_inv = ld_c.inverse();
        MultiPoly rem = *this;
        MultiPoly q(ring_);
        while (!rem.is_zero()) {
            const auto [lm, lc] = rem.leading_term();
            if (!ld_m.divides(lm)) return std::nullopt;
            const Monomial qm = ld_m.quotient_of(lm);
            const K qc = lc * ld_inv;
            q.add_term(qm, qc);
            for (const auto& [m, c] : d.terms_) rem.add_term(qm * m, -(qc * c));
        }
        return q;
    }

    template <Field K2, class Fn>
    MultiPoly<K2> map_coefficients(RingPtr<K2> target, Fn&& fn) const {
        if (target->size() != ring_->size()) throw std::invalid_argument("coefficient map must preserve variables");
        MultiPoly<K2> r(std::move(target));
        for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
        return r;
    }

    /// Canonical text: terms in descending grevlex order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string mono;
            for (std::size_t i = 0; i < ring_->size(); ++i) {
                if (m.e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += ring_->names[i];
                if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
            }
            std::string cs = c.to_string();
            bool negative = false;
            if (cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos) {
                negative = true;
                cs = cs.substr(1);
            }
            const bool compound = cs.find_first_of("+- ", 0) != std::string::npos;
            std::string term;
            if (mono.empty()) term = compound ? "(" + cs + ")" : cs;
            else if (cs == "1") term = mono;
            else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
            if (out.empty()) out = (negative ? "-" : "") + term;
            else out += (negative ? " - " : " + ") + term;
        }
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        if (!a.ring_ || !b.ring_) return false;
        return a.ring_->names == b.ring_->names && a.terms_ == b.terms_;
    }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    void check_ring(const MultiPoly& o) const {
        if (!ring_ || !o.ring_) throw std::invalid_argument("polynomial without a ring");
        if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw std::invalid_argument("polynomials live in different rings");
    }

    RingPtr<K> ring_;
    Terms terms_;
};

}  // namespace quintics
