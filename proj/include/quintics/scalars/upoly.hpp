#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quintics/scalars/field.hpp"

namespace quintics {

/// Dense univariate polynomial over a field, coefficients stored low to high
/// with no trailing zeros.
template <Field K>
class UPoly {
public:
    using Context = typename K::Context;

    UPoly() = default;
    explicit UPoly(Context ctx) : ctx_(std::move(ctx)) {}
    UPoly(Context ctx, std::vector<K> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const K& c) { return UPoly(c.context(), {c}); }
    /// The monomial c*t^k.
    static UPoly monomial(const K& c, int k) {
        std::vector<K> v(static_cast<std::size_t>(k) + 1, K::zero(c.context()));
        v.back() = c;
        return UPoly(c.context(), std::move(v));
    }

    const Context& context() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == K::one(ctx_); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : K::zero(ctx_); }
    K leading() const { return c_.empty() ? K::zero(ctx_) : c_.back(); }

    UPoly operator+(const UPoly& o) const {
        std::vector<K> v = c_.size() >= o.c_.size() ? c_ : o.c_;
        const auto& shorter = c_.size() >= o.c_.size() ? o.c_ : c_;
        for (std::size_t i = 0; i < shorter.size(); ++i) v[i] = v[i] + shorter[i];
        return UPoly(ctx_, std::move(v));
    }
    UPoly operator-() const {
        std::vector<K> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(-x);
        return UPoly(ctx_, std::move(v));
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly(ctx_);
        std::vector<K> v(c_.size() + o.c_.size() - 1, K::zero(ctx_));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
        }
        return UPoly(ctx_, std::move(v));
    }
    UPoly scaled(const K& s) const {
        if (s.is_zero()) return UPoly(ctx_);
        std::vector<K> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(x * s);
        return UPoly(ctx_, std::move(v));
    }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
        if (degree() < d.degree()) return {UPoly(ctx_), *this};
        std::vector<K> r = c_;
        std::vector<K> q(c_.size() - d.c_.size() + 1, K::zero(ctx_));
        const K lead_inv = d.leading().inverse();
        for (int k = degree() - d.degree(); k >= 0; --k) {
            const K f = r[static_cast<std::size_t>(k + d.degree())] * lead_inv;
            q[static_cast<std::size_t>(k)] = f;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] = r[k + j] - f * d.c_[j];
        }
        r.resize(static_cast<std::size_t>(d.degree()));
        return {UPoly(ctx_, std::move(q)), UPoly(ctx_, std::move(r))};
    }

    UPoly monic() const { return is_zero() ? *this : scaled(leading().inverse()); }

    K operator()(const K& t) const {
        K acc = K::zero(ctx_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UPoly derivative() const {
        std::vector<K> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * K::from_int(ctx_, static_cast<long>(i)));
        return UPoly(ctx_, std::move(v));
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const K& x = c_[static_cast<std::size_t>(k)];
            if (x.is_zero()) continue;
            std::string cs = x.to_string();
            // a lone negative number becomes a subtraction
            const bool negative = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos;
            if (negative) cs = cs.substr(1);
            if (out.empty()) out = negative ? "-" : "";
            else out += negative ? " - " : " + ";
            if (k == 0) {
                out += cs;
            } else {
                if (cs != "1") out += (cs.find_first_of("+- ") != std::string::npos ? "(" + cs + ")" : cs) + "*";
                out += var + (k > 1 ? "^" + std::to_string(k) : "");
            }
        }
        return out;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Context ctx_{};
    std::vector<K> c_;
};

/// Monic greatest common divisor.
template <Field K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <Field K>
struct ExtGcd {
    UPoly<K> g, s, t;
};

template <Field K>
ExtGcd<K> ext_gcd(const UPoly<K>& a, const UPoly<K>& b) {
    const auto& ctx = a.context();
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> s0 = UPoly<K>::constant(K::one(ctx)), s1(ctx);
    UPoly<K> t0(ctx), t1 = UPoly<K>::constant(K::one(ctx));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const K inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace quintics
