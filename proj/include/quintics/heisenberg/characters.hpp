#pragma once

#include <map>
#include <optional>
#include <vector>

#include "quintics/heisenberg/group.hpp"
#include "quintics/heisenberg/tables.hpp"

namespace quintics {

using CharacterBlocks = std::map<CharacterLabel, std::vector<MultiPoly<CycloNum>>>;

/// Splits the degree-d polynomials in the convention's variables into simultaneous
/// sigma/tau eigenspaces. Throws std::domain_error when sigma and tau do not commute
/// on that degree.
CharacterBlocks character_decomposition(int degree, Convention convention = Convention::kCoordinates);

/// The character of f if f is a simultaneous eigenvector, otherwise nullopt.
std::optional<CharacterLabel> character_of(const MultiPoly<CycloNum>& f, Convention convention = Convention::kCoordinates);

struct CharacterTableEntry {
    CharacterLabel label;
    MultiPoly<CycloNum> printed;
    std::optional<CharacterLabel> printed_character;  ///< character the printed cubic actually has
    MultiPoly<CycloNum> computed;                      ///< normalized representative of the computed block
    bool matches = false;                              ///< printed cubic spans the computed block
};

/// Compares the printed cubic table with the computed degree-3 decomposition.
std::vector<CharacterTableEntry> compare_character_table();

/// Scales f so that its leading coefficient (grevlex) is 1.
MultiPoly<CycloNum> normalize_leading(const MultiPoly<CycloNum>& f);

}  // namespace quintics
