#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace quintics {

/// Raised on any violation of a precondition on exact arithmetic
/// (division by zero, mismatched moduli, bad parameters).
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Context type for fields that need no runtime parameters.
struct TrivialContext {
    friend bool operator==(const TrivialContext&, const TrivialContext&) = default;
};

/// An exact coefficient field. Constants are manufactured from a context,
/// which is empty for Q and Q(eps15) and carries the modulus for F_p.
template <class K>
concept Field = std::regular<K> && requires(const K& x, const K& y, const typename K::Context& ctx, long n) {
    typename K::Context;
    { x + y } -> std::same_as<K>;
    { x - y } -> std::same_as<K>;
    { x * y } -> std::same_as<K>;
    { -x } -> std::same_as<K>;
    { x.inverse() } -> std::same_as<K>;
    { x.is_zero() } -> std::convertible_to<bool>;
    { x.context() } -> std::convertible_to<typename K::Context>;
    { K::zero(ctx) } -> std::same_as<K>;
    { K::one(ctx) } -> std::same_as<K>;
    { K::from_int(ctx, n) } -> std::same_as<K>;
    { K::characteristic(ctx) } -> std::convertible_to<std::uint64_t>;
    { x.to_string() } -> std::convertible_to<std::string>;
};

template <Field K>
K operator/(const K& x, const K& y) {
    return x * y.inverse();
}

template <Field K>
K pow(K base, long long e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    K result = K::one(base.context());
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

}  // namespace quintics
