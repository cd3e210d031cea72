#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quintics/poly/multipoly.hpp"
#include "quintics/scalars/cyclo.hpp"

namespace quintics {

/// Character (a, b) of the level-n group: sigma acts by e_n^a, tau by e_n^b.
struct CharacterLabel {
    int a = 0, b = 0;
    std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
    friend auto operator<=>(const CharacterLabel&, const CharacterLabel&) = default;
};

/// Coefficient written as a power of e3, or absent.
using E3Coeff = std::optional<int>;

/// A linear form c0 x0 + c1 x1 + c2 x2 with each c_i zero or a power of e3.
using E3LinearForm = std::array<E3Coeff, 3>;

struct PrintedCharacter {
    CharacterLabel label;
    MultiPoly<CycloNum> poly;
};

struct PrintedTriangle {
    CharacterLabel label;                   ///< (i, j) of the triangle T_(i,j)
    std::array<E3LinearForm, 3> lines;
    std::optional<int> printed_lambda_e3;   ///< lambda = -3 e3^k, or nullopt for infinity
};

/// The ring Q(e15)[x0, x1, x2] shared by all plane constructions.
RingPtr<CycloNum> plane_ring();

/// The eight cubics attached to the non-trivial characters, entered exactly as printed
/// (including the entry for (2,2), which repeats the entry for (2,1)).
std::vector<PrintedCharacter> printed_character_table();

/// The four singular members of the Hesse pencil as printed, each with the lambda listed
/// in the same position.
std::vector<PrintedTriangle> printed_triangles();

MultiPoly<CycloNum> linear_form(const E3LinearForm& f);

/// x0^3 + x1^3 + x2^3 + lambda x0 x1 x2.
MultiPoly<CycloNum> hesse_member(const CycloNum& lambda);

}  // namespace quintics
