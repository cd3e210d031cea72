#pragma once

#include <string>
#include <vector>

#include "quintics/poly/multipoly.hpp"
#include "quintics/scalars/cyclo.hpp"
#include "quintics/scalars/roots.hpp"

namespace quintics {

/// Which coordinate system a Schroedinger-type action is written in.
///  kCoordinates:     3 variables, sigma(x_i) = x_{i-1}, tau(x_i) = e3^{-i} x_i
///  kDualCoordinates: 3 variables, sigma(xi_i) = xi_{i-1}, tau(xi_i) = e3^{i} xi_i
///  kLevel15:         15 variables, sigma(y_i) = y_{i-1}, tau(y_i) = e15^{-i} y_i
///  kLevel5:          5 variables, sigma(x_i) = x_{i-1}, tau(x_i) = e5^{-e i} x_i
enum class Convention { kCoordinates, kDualCoordinates, kLevel15, kLevel5 };

int convention_level(Convention c);
/// Twist exponent a convention imposes on tau (the dual convention inverts it).
int convention_twist(Convention c);
std::string to_string(Convention c);

inline int mod(long v, long n) {
    long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

/// The element e_n^central * sigma^s * tau^t of the Heisenberg group of level n,
/// where tau scales x_i by e_n^{-twist*i}. The group law is
/// (c1 s1 t1)(c2 s2 t2) = (c1 + c2 + twist*t1*s2, s1 + s2, t1 + t2).
class HeisenbergElement {
public:
    HeisenbergElement(int level, int sigma_power, int tau_power, int central = 0, int twist = 1);

    static HeisenbergElement identity(int level, int twist = 1) { return {level, 0, 0, 0, twist}; }
    static HeisenbergElement sigma(int level, int power = 1, int twist = 1) { return {level, power, 0, 0, twist}; }
    static HeisenbergElement tau(int level, int power = 1, int twist = 1) { return {level, 0, power, 0, twist}; }
    static HeisenbergElement central_element(int level, int power, int twist = 1) { return {level, 0, 0, power, twist}; }
    /// The generators sigma and tau in the given convention.
    static HeisenbergElement sigma_of(Convention c, int power = 1) { return sigma(convention_level(c), power, convention_twist(c)); }
    static HeisenbergElement tau_of(Convention c, int power = 1) { return tau(convention_level(c), power, convention_twist(c)); }

    int level() const { return n_; }
    int sigma_power() const { return s_; }
    int tau_power() const { return t_; }
    int central_exponent() const { return c_; }
    int twist() const { return e_; }
    /// The central scalar e_n^central as an element of Q(e15).
    CycloNum central() const;

    HeisenbergElement operator*(const HeisenbergElement& o) const;
    HeisenbergElement inverse() const;
    HeisenbergElement pow(long k) const;

    /// Image of variable i: coefficient exponent k (scalar e_n^k) and target index.
    std::pair<int, int> image_of_variable(int i) const {
        return {mod(c_ - static_cast<long>(e_) * t_ * i, n_), mod(i - s_, n_)};
    }

    std::string to_string() const;
    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;

private:
    int n_, s_, t_, c_, e_;
};

/// The linear substitution g acting on f; variable count must be the level and
/// the twist must match the convention (level 5 accepts any twist coprime to 5).
template <Field K>
MultiPoly<K> act_on_polynomial(const HeisenbergElement& g, const MultiPoly<K>& f, Convention convention,
                               const UnityRoots<K>& roots) {
    const int n = convention_level(convention);
    if (g.level() != n) throw std::invalid_argument("element level does not match the convention");
    if (static_cast<int>(f.ring()->size()) != n) throw std::invalid_argument("polynomial variable count does not match the convention");
    if (convention != Convention::kLevel5 && mod(g.twist(), n) != mod(convention_twist(convention), n)) {
        throw std::invalid_argument("element twist does not match the convention");
    }
    std::vector<MultiPoly<K>> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto [k, j] = g.image_of_variable(i);
        images.push_back(MultiPoly<K>::variable(f.ring(), static_cast<std::size_t>(j)).scaled(roots.power(n, k)));
    }
    return f.substitute(images);
}

/// The scalar by which g h g^-1 h^-1 acts, read off from the substitution action
/// on the coordinate variables of the convention.
CycloNum commutator_scalar(const HeisenbergElement& g, const HeisenbergElement& h, Convention convention);

/// Commutator of the standard generators sigma, tau of a convention.
CycloNum commutator_scalar(Convention convention);

}  // namespace quintics
