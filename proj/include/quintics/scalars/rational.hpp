#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "quintics/scalars/field.hpp"

namespace quintics {

/// Arbitrary-precision rational number; always stored in lowest terms.
class Rational {
public:
    using Context = TrivialContext;

    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational zero(const Context& = {}) { return Rational(0); }
    static Rational one(const Context& = {}) { return Rational(1); }
    static Rational from_int(const Context&, long n) { return Rational(n); }
    static std::uint64_t characteristic(const Context& = {}) { return 0; }
    Context context() const { return {}; }

    /// Parses "n" or "n/d".
    static Rational parse(const std::string& text);

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational inverse() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }
    const mpq_class& value() const { return v_; }

    /// Residue of this rational in F_p; throws if p divides the denominator.
    std::uint64_t mod(std::uint64_t p) const;

    std::string to_string() const { return v_.get_str(); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_{0};
};

static_assert(Field<Rational>);

}  // namespace quintics
