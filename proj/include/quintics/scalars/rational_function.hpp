#pragma once

#include <string>
#include <utility>

#include "quintics/scalars/upoly.hpp"

namespace quintics {

/// Element of B(a): a quotient of univariate polynomials in the modulus
/// parameter a, kept in lowest terms with a monic denominator.
template <Field B>
class RationalFunction {
public:
    using Context = typename B::Context;
    using Poly = UPoly<B>;

    RationalFunction() : num_(), den_(Poly::constant(B::one(Context{}))) {}
    explicit RationalFunction(const B& c) : num_(Poly::constant(c)), den_(Poly::constant(B::one(c.context()))) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    /// The parameter a itself.
    static RationalFunction parameter(const Context& ctx) {
        return RationalFunction(Poly::monomial(B::one(ctx), 1), Poly::constant(B::one(ctx)), Normalized{});
    }
    static RationalFunction zero(const Context& ctx) { return RationalFunction(Poly(ctx), Poly::constant(B::one(ctx)), Normalized{}); }
    static RationalFunction one(const Context& ctx) { return RationalFunction(B::one(ctx)); }
    static RationalFunction from_int(const Context& ctx, long n) { return RationalFunction(B::from_int(ctx, n)); }
    static std::uint64_t characteristic(const Context& ctx) { return B::characteristic(ctx); }
    Context context() const { return num_.context(); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }

    RationalFunction operator+(const RationalFunction& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (den_ == o.den_) {
            if (is_polynomial()) return RationalFunction(num_ + o.num_, den_, Normalized{});
            return RationalFunction(num_ + o.num_, den_);
        }
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_, Normalized{}); }
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator*(const RationalFunction& o) const {
        if (is_zero() || o.is_zero()) return zero(context());
        if (is_constant()) return RationalFunction(o.num_.scaled(num_.coeff(0)), o.den_, Normalized{});
        if (o.is_constant()) return RationalFunction(num_.scaled(o.num_.coeff(0)), den_, Normalized{});
        if (is_polynomial() && o.is_polynomial()) return RationalFunction(num_ * o.num_, den_, Normalized{});
        // cross-cancel so the product stays reduced
        const Poly g1 = gcd(num_, o.den_);
        const Poly g2 = gcd(o.num_, den_);
        Poly n = num_.divmod(g1).first * o.num_.divmod(g2).first;
        Poly d = den_.divmod(g2).first * o.den_.divmod(g1).first;
        return RationalFunction(std::move(n), std::move(d), MonicOnly{});
    }
    RationalFunction inverse() const {
        if (is_zero()) throw ArithmeticError("inverse of zero rational function");
        return RationalFunction(den_, num_, MonicOnly{});
    }

    /// Specializes a to a base-field value; throws if the denominator vanishes.
    B evaluate(const B& a) const {
        const B d = den_(a);
        if (d.is_zero()) throw ArithmeticError("rational function has a pole at the given parameter");
        return num_(a) * d.inverse();
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string("a");
        return "(" + num_.to_string("a") + ")/(" + den_.to_string("a") + ")";
    }

    friend bool operator==(const RationalFunction& x, const RationalFunction& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

private:
    struct Normalized {};
    struct MonicOnly {};
    RationalFunction(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
    RationalFunction(Poly num, Poly den, MonicOnly) : num_(std::move(num)), den_(std::move(den)) { make_monic(); }

    void make_monic() {
        if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(B::one(den_.context()));
            return;
        }
        const B lead = den_.leading();
        if (lead != B::one(den_.context())) {
            const B inv = lead.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
    void normalize() {
        if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
        if (!num_.is_zero() && den_.degree() > 0) {
            const Poly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_.divmod(g).first;
                den_ = den_.divmod(g).first;
            }
        }
        make_monic();
    }

    Poly num_;
    Poly den_;
};

}  // namespace quintics
