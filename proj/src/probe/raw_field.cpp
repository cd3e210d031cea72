#include "quintics/probe/raw_field.hpp"

#include <utility>

#include "quintics/scalars/prime_field.hpp"

namespace quintics {

RawField::RawField(std::uint32_t p) : p_(p), inv_(p, 0) {
    if (!is_prime(p) || p > 65521) throw std::invalid_argument("raw arithmetic needs a prime below 2^16");
    for (std::uint32_t a = 1; a < p; ++a) {
        if (inv_[a] != 0) continue;
        // extended Euclid once per inverse pair
        long long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            const long long q = r / nr;
            t = std::exchange(nt, t - q * nt);
            r = std::exchange(nr, r - q * nr);
        }
        const auto v = static_cast<std::uint32_t>(t < 0 ? t + p : t);
        inv_[a] = v;
        inv_[v] = a;
    }
}

bool is_zero(const RawPoint& x) {
    for (auto c : x)
        if (c != 0) return false;
    return true;
}

RawPoint normalize(const RawField& f, RawPoint x) {
    for (std::size_t i = 0; i < 5; ++i) {
        if (x[i] % f.p() == 0) continue;
        const std::uint32_t s = f.inv(x[i]);
        for (auto& c : x) c = f.mul(c % f.p(), s);
        return x;
    }
    throw std::invalid_argument("the zero vector is not a projective point");
}

namespace {

// Row reduction in place; returns rank and the determinant's sign and pivot product.
int eliminate(const RawField& f, RawMatrix& m, std::uint32_t* det) {
    int r = 0;
    std::uint32_t d = 1;
    for (int c = 0; c < 5 && r < 5; ++c) {
        int piv = -1;
        for (int i = r; i < 5; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            d = 0;
            continue;
        }
        if (piv != r) {
            std::swap(m[piv], m[r]);
            d = f.neg(d);
        }
        d = f.mul(d, m[r][c]);
        const std::uint32_t inv = f.inv(m[r][c]);
        for (int i = r + 1; i < 5; ++i) {
            if (m[i][c] == 0) continue;
            const std::uint32_t factor = f.mul(m[i][c], inv);
            for (int k = c; k < 5; ++k) m[i][k] = f.sub(m[i][k], f.mul(factor, m[r][k]));
        }
        ++r;
    }
    if (det) *det = r == 5 ? d : 0;
    return r;
}

}  // namespace

std::uint32_t determinant(const RawField& f, RawMatrix m) {
    std::uint32_t d = 0;
    eliminate(f, m, &d);
    return d;
}

int rank(const RawField& f, RawMatrix m) { return eliminate(f, m, nullptr); }

std::vector<RawPoint> kernel(const RawField& f, const RawMatrix& m) {
    std::vector<std::uint32_t> flat;
    for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
    std::vector<RawPoint> out;
    for (const auto& v : dense_kernel(f, flat, 5, 5)) out.push_back({v[0], v[1], v[2], v[3], v[4]});
    return out;
}

RawPoint apply(const RawField& f, const RawMatrix& m, const RawPoint& x) {
    RawPoint out{};
    for (std::size_t i = 0; i < 5; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < 5; ++j) acc += static_cast<std::uint64_t>(m[i][j]) * x[j];
        out[i] = static_cast<std::uint32_t>(acc % f.p());
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> dense_kernel(const RawField& f, std::vector<std::uint32_t> m, std::size_t rows,
                                                     std::size_t cols) {
    if (m.size() != rows * cols) throw std::invalid_argument("matrix data does not match its shape");
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return m[i * cols + j]; };
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(at(piv, k), at(r, k));
        const std::uint32_t inv = f.inv(at(r, c));
        for (std::size_t k = c; k < cols; ++k) at(r, k) = f.mul(at(r, k), inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || at(i, c) == 0) continue;
            const std::uint32_t factor = at(i, c);
            for (std::size_t k = c; k < cols; ++k)
                if (at(r, k) != 0) at(i, k) = f.sub(at(i, k), f.mul(factor, at(r, k)));
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace quintics
