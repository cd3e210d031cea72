#include "quintics/heisenberg/characters.hpp"

#include <set>
#include <stdexcept>

#include "quintics/poly/poly_matrix.hpp"

namespace quintics {
namespace {

RingPtr<CycloNum> ring_for(Convention c) {
    const int n = convention_level(c);
    return make_ring<CycloNum>(n == 15 ? "y" : "x", static_cast<std::size_t>(n));
}

// Exponent k with g f = e_n^k f, if f is an eigenvector of g.
std::optional<int> eigen_exponent(const HeisenbergElement& g, const MultiPoly<CycloNum>& f, Convention c,
                                  const UnityRoots<CycloNum>& roots) {
    const auto gf = act_on_polynomial(g, f, c, roots);
    const auto& [m, lead] = f.leading_term();
    const CycloNum ratio = gf.coefficient(m) * lead.inverse();
    if (gf != f.scaled(ratio)) return std::nullopt;
    const int n = convention_level(c);
    for (int k = 0; k < n; ++k) {
        if (roots.power(n, k) == ratio) return k;
    }
    return std::nullopt;
}

}  // namespace

MultiPoly<CycloNum> normalize_leading(const MultiPoly<CycloNum>& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.leading_term().second.inverse());
}

CharacterBlocks character_decomposition(int degree, Convention convention) {
    const int n = convention_level(convention);
    if (degree < 0) throw std::invalid_argument("negative degree");
    // sigma tau = e^(-twist) tau sigma, so they commute on degree d iff n divides d
    if (degree % n != 0) throw std::domain_error("sigma and tau do not commute in degree " + std::to_string(degree));
    const auto ring = ring_for(convention);
    const auto roots = cyclo_roots();
    const int twist = convention_twist(convention);

    CharacterBlocks blocks;
    std::set<std::vector<std::uint8_t>> seen;
    for (const Monomial& m : monomials_of_degree(static_cast<std::size_t>(n), degree)) {
        const std::vector<std::uint8_t> key(m.e.begin(), m.e.begin() + n);
        if (seen.count(key)) continue;
        // sigma-orbit of m: sigma sends x_i to x_{i-1}
        std::vector<Monomial> orbit{m};
        while (true) {
            Monomial next;
            for (int i = 0; i < n; ++i) next.e[static_cast<std::size_t>(mod(i - 1, n))] = orbit.back().e[static_cast<std::size_t>(i)];
            if (next == m) break;
            orbit.push_back(next);
        }
        for (const auto& o : orbit) seen.insert(std::vector<std::uint8_t>(o.e.begin(), o.e.begin() + n));
        long weight = 0;
        for (int i = 0; i < n; ++i) weight += static_cast<long>(i) * m.e[static_cast<std::size_t>(i)];
        const int b = mod(-twist * weight, n);
        const int len = static_cast<int>(orbit.size());
        for (int a = 0; a < n; a += n / len) {
            // v_a = sum_k e^{-a k} sigma^k(m) satisfies sigma v_a = e^a v_a
            MultiPoly<CycloNum> v(ring);
            for (int k = 0; k < len; ++k) v.add_term(orbit[static_cast<std::size_t>(k)], roots.power(n, -a * k));
            blocks[{a, b}].push_back(normalize_leading(v));
        }
    }
    return blocks;
}

std::optional<CharacterLabel> character_of(const MultiPoly<CycloNum>& f, Convention convention) {
    if (f.is_zero()) return std::nullopt;
    const auto roots = cyclo_roots();
    const auto a = eigen_exponent(HeisenbergElement::sigma_of(convention), f, convention, roots);
    const auto b = eigen_exponent(HeisenbergElement::tau_of(convention), f, convention, roots);
    if (!a || !b) return std::nullopt;
    return CharacterLabel{*a, *b};
}

std::vector<CharacterTableEntry> compare_character_table() {
    const CharacterBlocks blocks = character_decomposition(3, Convention::kCoordinates);
    std::vector<CharacterTableEntry> out;
    for (const auto& printed : printed_character_table()) {
        CharacterTableEntry e;
        e.label = printed.label;
        e.printed = printed.poly;
        e.printed_character = character_of(printed.poly);
        const auto it = blocks.find(printed.label);
        if (it == blocks.end() || it->second.size() != 1) throw std::logic_error("non-trivial characters must have 1-dimensional blocks");
        e.computed = it->second.front();
        e.matches = in_linear_span(printed.poly, it->second).has_value();
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace quintics
