#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace quintics {

/// Residue arithmetic modulo a small prime on plain integers, for the scanning kernels.
class RawField {
public:
    explicit RawField(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("inverse of zero");
        return inv_[a % p_];
    }
    std::uint32_t reduce(long long v) const {
        const long long r = v % static_cast<long long>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> inv_;
};

using RawPoint = std::array<std::uint32_t, 5>;
using RawMatrix = std::array<std::array<std::uint32_t, 5>, 5>;

/// Scales so that the first nonzero coordinate is 1; throws on the zero vector.
RawPoint normalize(const RawField& f, RawPoint x);
bool is_zero(const RawPoint& x);

std::uint32_t determinant(const RawField& f, RawMatrix m);
int rank(const RawField& f, RawMatrix m);
/// Basis of the right kernel.
std::vector<RawPoint> kernel(const RawField& f, const RawMatrix& m);
RawPoint apply(const RawField& f, const RawMatrix& m, const RawPoint& x);

/// Kernel basis of a dense rows x cols matrix (row-major), by reduced row echelon form.
std::vector<std::vector<std::uint32_t>> dense_kernel(const RawField& f, std::vector<std::uint32_t> m, std::size_t rows,
                                                     std::size_t cols);

}  // namespace quintics
