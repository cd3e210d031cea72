#pragma once

#include <array>
#include <cstdint>

#include "quintics/scalars/cyclo.hpp"
#include "quintics/scalars/rational_function.hpp"

namespace quintics {

/// Powers of a fixed primitive 15th root of unity inside a field K;
/// e_n^k is read off as e15^(15k/n).
template <Field K>
class UnityRoots {
public:
    explicit UnityRoots(const K& e15) {
        powers_[0] = K::one(e15.context());
        for (std::size_t k = 1; k < 15; ++k) powers_[k] = powers_[k - 1] * e15;
        if (powers_[14] * e15 != powers_[0]) throw ArithmeticError("supplied element is not a 15th root of unity");
    }

    const K& e15() const { return powers_[1]; }

    K power(int order, long k) const {
        if (order <= 0 || 15 % order != 0) throw ArithmeticError("root-of-unity order must divide 15");
        long r = (15 / order) * (k % order) % 15;
        if (r < 0) r += 15;
        return powers_[static_cast<std::size_t>(r)];
    }

private:
    std::array<K, 15> powers_{};
};

inline UnityRoots<CycloNum> cyclo_roots() { return UnityRoots<CycloNum>(CycloNum::e15_power(1)); }

inline UnityRoots<PrimeFieldNum> prime_roots(std::uint32_t p) { return UnityRoots<PrimeFieldNum>(canonical_e15_witness(p)); }

template <Field B>
UnityRoots<RationalFunction<B>> lift_roots(const UnityRoots<B>& base) {
    return UnityRoots<RationalFunction<B>>(RationalFunction<B>(base.e15()));
}

/// Precomputed ring homomorphism Q(e15) -> F_p for a validated witness.
class CycloEmbedding {
public:
    CycloEmbedding(std::uint32_t p, const PrimeFieldNum& witness) : ctx_(p), roots_(witness) {
        // validates p = 1 mod 15 and the witness order
        (void)embed_cyclo_in_prime_field(CycloNum(1), p, witness);
    }
    explicit CycloEmbedding(std::uint32_t p) : CycloEmbedding(p, canonical_e15_witness(p)) {}

    PrimeFieldNum operator()(const CycloNum& x) const {
        PrimeFieldNum acc = PrimeFieldNum::zero(ctx_);
        for (int i = 0; i < CycloNum::kDegree; ++i) {
            const auto& c = x.coeffs()[static_cast<std::size_t>(i)];
            if (!c.is_zero()) acc = acc + PrimeFieldNum(ctx_, static_cast<long long>(c.mod(ctx_.modulus()))) * roots_.power(15, i);
        }
        return acc;
    }
    const PrimeContext& context() const { return ctx_; }
    const UnityRoots<PrimeFieldNum>& roots() const { return roots_; }

private:
    PrimeContext ctx_;
    UnityRoots<PrimeFieldNum> roots_;
};

}  // namespace quintics
