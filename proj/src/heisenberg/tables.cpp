#include "quintics/heisenberg/tables.hpp"

namespace quintics {
namespace {

using P = MultiPoly<CycloNum>;

P mono(int e3, int a, int b, int c) {
    Monomial m;
    m.e[0] = static_cast<std::uint8_t>(a);
    m.e[1] = static_cast<std::uint8_t>(b);
    m.e[2] = static_cast<std::uint8_t>(c);
    return P::term(plane_ring(), m, cyclo_root_of_unity(3, e3));
}

}  // namespace

RingPtr<CycloNum> plane_ring() {
    static const RingPtr<CycloNum> ring = make_ring<CycloNum>("x", 3);
    return ring;
}

std::vector<PrintedCharacter> printed_character_table() {
    return {
        {{1, 0}, mono(0, 3, 0, 0) + mono(1, 0, 3, 0) + mono(2, 0, 0, 3)},
        {{2, 0}, mono(0, 3, 0, 0) + mono(2, 0, 3, 0) + mono(1, 0, 0, 3)},
        {{0, 1}, mono(0, 1, 2, 0) + mono(0, 0, 1, 2) + mono(0, 2, 0, 1)},
        {{1, 1}, mono(0, 1, 2, 0) + mono(1, 0, 1, 2) + mono(2, 2, 0, 1)},
        {{2, 1}, mono(0, 1, 2, 0) + mono(2, 0, 1, 2) + mono(1, 2, 0, 1)},
        {{0, 2}, mono(0, 2, 1, 0) + mono(0, 0, 2, 1) + mono(0, 1, 0, 2)},
        {{1, 2}, mono(0, 2, 1, 0) + mono(1, 0, 2, 1) + mono(2, 1, 0, 2)},
        {{2, 2}, mono(0, 1, 2, 0) + mono(2, 0, 1, 2) + mono(1, 2, 0, 1)},
    };
}

std::vector<PrintedTriangle> printed_triangles() {
    const E3Coeff z = std::nullopt;
    return {
        {{0, 1}, {{{0, z, z}, {z, 0, z}, {z, z, 0}}}, std::nullopt},
        {{1, 1}, {{{0, 2, 2}, {0, 0, 1}, {0, 1, 0}}}, 2},
        {{1, 0}, {{{0, 1, 2}, {0, 2, 1}, {0, 0, 0}}}, 0},
        {{1, 2}, {{{0, 0, 2}, {0, 1, 1}, {0, 2, 0}}}, 1},
    };
}

MultiPoly<CycloNum> linear_form(const E3LinearForm& f) {
    P out(plane_ring());
    for (std::size_t i = 0; i < 3; ++i) {
        if (f[i]) out.add_term(Monomial::variable(i), cyclo_root_of_unity(3, *f[i]));
    }
    return out;
}

MultiPoly<CycloNum> hesse_member(const CycloNum& lambda) {
    Monomial m;
    m.e = {1, 1, 1};
    return mono(0, 3, 0, 0) + mono(0, 0, 3, 0) + mono(0, 0, 0, 3) + P::term(plane_ring(), m, lambda);
}

}  // namespace quintics
