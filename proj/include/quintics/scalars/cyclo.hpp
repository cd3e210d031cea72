#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "quintics/scalars/prime_field.hpp"
#include "quintics/scalars/rational.hpp"

namespace quintics {

/// Element of Q(e15) = Q[t]/Phi_15(t), Phi_15 = t^8 - t^7 + t^5 - t^4 + t^3 - t + 1,
/// with t standing for e15 = exp(2 pi i/15). Always stored reduced.
class CycloNum {
public:
    using Context = TrivialContext;
    static constexpr int kDegree = 8;

    CycloNum() = default;
    CycloNum(long n) { c_[0] = Rational(n); }  // NOLINT(google-explicit-constructor)
    explicit CycloNum(const Rational& q) { c_[0] = q; }
    explicit CycloNum(const std::array<Rational, kDegree>& coeffs) : c_(coeffs) {}

    static CycloNum zero(const Context& = {}) { return CycloNum(0); }
    static CycloNum one(const Context& = {}) { return CycloNum(1); }
    static CycloNum from_int(const Context&, long n) { return CycloNum(n); }
    static std::uint64_t characteristic(const Context& = {}) { return 0; }
    Context context() const { return {}; }

    /// t^k reduced modulo Phi_15, for any integer k.
    static CycloNum e15_power(long k);

    const std::array<Rational, kDegree>& coeffs() const { return c_; }

    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator-() const;
    CycloNum inverse() const;

    bool is_zero() const;
    bool is_rational() const;

    /// If this is a root of unity, its multiplicative order (a divisor of 30); otherwise 0.
    int root_of_unity_order() const;
    /// If this equals +-e15^k, returns (sign, k) with k in [0,15); sign 0 otherwise.
    std::pair<int, int> as_signed_e15_power() const;

    /// Renders roots of unity as e3^k, e5^k or e15^k; anything else as a sum over e15 powers.
    std::string to_string() const;

    friend bool operator==(const CycloNum&, const CycloNum&) = default;

private:
    std::array<Rational, kDegree> c_{};
};

static_assert(Field<CycloNum>);

/// The canonical primitive order-th root of unity raised to power; order must divide 15.
CycloNum cyclo_root_of_unity(int order, long power);

/// Ring homomorphism Q(e15) -> F_p sending t to witness_root. Requires p = 1 mod 15,
/// witness of multiplicative order exactly 15, and denominators prime to p.
PrimeFieldNum embed_cyclo_in_prime_field(const CycloNum& x, std::uint32_t p, const PrimeFieldNum& witness_root);

/// Smallest element of F_p* of order exactly 15 (p = 1 mod 15).
PrimeFieldNum canonical_e15_witness(std::uint32_t p);

}  // namespace quintics
