#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace quintics {

inline constexpr std::size_t kMaxVariables = 15;

/// Fixed-width exponent vector.
struct Monomial {
    std::array<std::uint8_t, kMaxVariables> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVariables; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (e[i] > o.e[i]) return false;
        }
        return true;
    }
    /// o / *this; requires divides(o).
    Monomial quotient_of(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVariables; ++i) r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
        return r;
    }
    static Monomial variable(std::size_t i, int power = 1) {
        Monomial m;
        m.e[i] = static_cast<std::uint8_t>(power);
        return m;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded reverse-lexicographic order: higher total degree wins; ties go to
/// the monomial with the smaller exponent in the last differing variable.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t i = kMaxVariables; i-- > 0;) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
        }
        return false;
    }
};

/// All monomials of total degree d in n variables, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

}  // namespace quintics
