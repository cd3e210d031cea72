#include "quintics/scalars/prime_field.hpp"

#include <utility>
#include <vector>

namespace quintics {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeContext::PrimeContext(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) throw ArithmeticError("modulus " + std::to_string(p) + " is not a supported prime");
}

PrimeFieldNum::PrimeFieldNum(const PrimeContext& ctx, long long value) : p_(ctx.modulus()) {
    long long r = value % static_cast<long long>(p_);
    if (r < 0) r += p_;
    r_ = static_cast<std::uint32_t>(r);
}

void PrimeFieldNum::check(const PrimeFieldNum& o) const {
    if (p_ != o.p_) throw ArithmeticError("mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
}

PrimeFieldNum PrimeFieldNum::operator+(const PrimeFieldNum& o) const {
    check(o);
    std::uint32_t s = r_ + o.r_;
    return make(s >= p_ ? s - p_ : s, p_);
}

PrimeFieldNum PrimeFieldNum::operator-(const PrimeFieldNum& o) const {
    check(o);
    return make(r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_, p_);
}

PrimeFieldNum PrimeFieldNum::operator*(const PrimeFieldNum& o) const {
    check(o);
    return make(static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_), p_);
}

PrimeFieldNum PrimeFieldNum::inverse() const {
    if (r_ == 0) throw ArithmeticError("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid on (r, p)
    long long t = 0, new_t = 1;
    long long r = p_, new_r = r_;
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return make(static_cast<std::uint32_t>(t), p_);
}

std::uint64_t PrimeFieldNum::multiplicative_order() const {
    if (r_ == 0) throw ArithmeticError("zero has no multiplicative order");
    std::uint64_t order = p_ - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t m = order;
    for (std::uint64_t q = 2; q * q <= m; ++q) {
        if (m % q != 0) continue;
        primes.push_back(q);
        while (m % q == 0) m /= q;
    }
    if (m > 1) primes.push_back(m);
    const PrimeFieldNum unit = one(context());
    for (std::uint64_t q : primes) {
        while (order % q == 0 && pow(*this, static_cast<long long>(order / q)) == unit) order /= q;
    }
    return order;
}

}  // namespace quintics
