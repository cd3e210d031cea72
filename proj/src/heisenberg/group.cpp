#include "quintics/heisenberg/group.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace quintics {

int convention_level(Convention c) {
    switch (c) {
        case Convention::kCoordinates:
        case Convention::kDualCoordinates: return 3;
        case Convention::kLevel15: return 15;
        case Convention::kLevel5: return 5;
    }
    throw std::invalid_argument("unknown convention");
}

int convention_twist(Convention c) { return c == Convention::kDualCoordinates ? -1 : 1; }

std::string to_string(Convention c) {
    switch (c) {
        case Convention::kCoordinates: return "coordinates";
        case Convention::kDualCoordinates: return "dual-coordinates";
        case Convention::kLevel15: return "level15";
        case Convention::kLevel5: return "level5";
    }
    return "unknown";
}

HeisenbergElement::HeisenbergElement(int level, int sigma_power, int tau_power, int central, int twist)
    : n_(level), s_(0), t_(0), c_(0), e_(0) {
    if (level != 3 && level != 5 && level != 15) throw std::invalid_argument("Heisenberg level must be 3, 5 or 15");
    if (std::gcd(mod(twist, level), level) != 1) throw std::invalid_argument("twist must be coprime to the level");
    s_ = mod(sigma_power, n_);
    t_ = mod(tau_power, n_);
    c_ = mod(central, n_);
    e_ = mod(twist, n_);
}

CycloNum HeisenbergElement::central() const { return cyclo_root_of_unity(n_, c_); }

HeisenbergElement HeisenbergElement::operator*(const HeisenbergElement& o) const {
    if (n_ != o.n_ || e_ != o.e_) throw std::invalid_argument("cannot compose elements of different Heisenberg groups");
    return {n_, s_ + o.s_, t_ + o.t_, c_ + o.c_ + e_ * t_ * o.s_, e_};
}

HeisenbergElement HeisenbergElement::inverse() const {
    // (c, s, t) * (c', -s, -t) = (c + c' - e t s, 0, 0)
    return {n_, -s_, -t_, -c_ + e_ * t_ * s_, e_};
}

HeisenbergElement HeisenbergElement::pow(long k) const {
    HeisenbergElement base = k < 0 ? inverse() : *this;
    HeisenbergElement acc = identity(n_, e_);
    for (long i = 0; i < (k < 0 ? -k : k); ++i) acc = acc * base;
    return acc;
}

std::string HeisenbergElement::to_string() const {
    std::string out = "H" + std::to_string(n_) + "[";
    out += "e" + std::to_string(n_) + "^" + std::to_string(c_) + " sigma^" + std::to_string(s_) + " tau^" + std::to_string(t_);
    if (e_ != 1) out += " twist " + std::to_string(e_);
    return out + "]";
}

CycloNum commutator_scalar(const HeisenbergElement& g, const HeisenbergElement& h, Convention convention) {
    const int n = convention_level(convention);
    const auto roots = cyclo_roots();
    const auto ring = make_ring<CycloNum>(n == 15 ? "y" : "x", static_cast<std::size_t>(n));
    const HeisenbergElement gi = g.inverse(), hi = h.inverse();
    std::optional<CycloNum> scalar;
    for (int i = 0; i < n; ++i) {
        const auto v = MultiPoly<CycloNum>::variable(ring, static_cast<std::size_t>(i));
        // g h g^-1 h^-1 applied as a composition of substitutions
        auto w = act_on_polynomial(hi, v, convention, roots);
        w = act_on_polynomial(gi, w, convention, roots);
        w = act_on_polynomial(h, w, convention, roots);
        w = act_on_polynomial(g, w, convention, roots);
        const auto& vm = v.leading_term().first;
        const std::optional<CycloNum> c = (w.term_count() == 1 && w.leading_term().first == vm) ? std::optional<CycloNum>(w.coefficient(vm)) : std::nullopt;
        if (!c) throw std::logic_error("commutator is not a scalar on variable " + std::to_string(i));
        if (scalar && *scalar != *c) throw std::logic_error("commutator is not a scalar");
        scalar = *c;
    }
    return *scalar;
}

CycloNum commutator_scalar(Convention convention) {
    return commutator_scalar(HeisenbergElement::sigma_of(convention), HeisenbergElement::tau_of(convention), convention);
}

}  // namespace quintics
