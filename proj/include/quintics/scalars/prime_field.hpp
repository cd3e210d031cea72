#pragma once

#include <cstdint>
#include <string>

#include "quintics/scalars/field.hpp"

namespace quintics {

bool is_prime(std::uint64_t n);

/// Carries the modulus of F_p. Construction validates primality.
class PrimeContext {
public:
    PrimeContext() = default;
    explicit PrimeContext(std::uint32_t p);
    std::uint32_t modulus() const { return p_; }
    /// Skips the primality test; for moduli already validated elsewhere.
    static PrimeContext unchecked(std::uint32_t p) {
        PrimeContext c;
        c.p_ = p;
        return c;
    }
    friend bool operator==(const PrimeContext&, const PrimeContext&) = default;

private:
    std::uint32_t p_ = 2;
};

/// Element of a prime field F_p with p < 2^31.
class PrimeFieldNum {
public:
    using Context = PrimeContext;

    PrimeFieldNum() = default;
    PrimeFieldNum(const PrimeContext& ctx, long long value);

    static PrimeFieldNum zero(const Context& ctx) { return PrimeFieldNum(ctx, 0); }
    static PrimeFieldNum one(const Context& ctx) { return PrimeFieldNum(ctx, 1); }
    static PrimeFieldNum from_int(const Context& ctx, long n) { return PrimeFieldNum(ctx, n); }
    static std::uint64_t characteristic(const Context& ctx) { return ctx.modulus(); }
    Context context() const { return PrimeContext::unchecked(p_); }

    std::uint32_t residue() const { return r_; }
    std::uint32_t modulus() const { return p_; }

    PrimeFieldNum operator+(const PrimeFieldNum& o) const;
    PrimeFieldNum operator-(const PrimeFieldNum& o) const;
    PrimeFieldNum operator*(const PrimeFieldNum& o) const;
    PrimeFieldNum operator-() const { return make(r_ == 0 ? 0 : p_ - r_, p_); }
    PrimeFieldNum inverse() const;

    bool is_zero() const { return r_ == 0; }
    /// Smallest k >= 1 with x^k = 1; throws on zero.
    std::uint64_t multiplicative_order() const;

    std::string to_string() const { return std::to_string(r_); }

    friend bool operator==(const PrimeFieldNum&, const PrimeFieldNum&) = default;

private:
    friend class PrimeContext;
    static PrimeFieldNum make(std::uint32_t r, std::uint32_t p) {
        PrimeFieldNum x;
        x.r_ = r;
        x.p_ = p;
        return x;
    }
    void check(const PrimeFieldNum& o) const;

    std::uint32_t r_ = 0;
    std::uint32_t p_ = 2;
};

static_assert(Field<PrimeFieldNum>);

}  // namespace quintics
