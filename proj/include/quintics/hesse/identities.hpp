#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quintics/heisenberg/tables.hpp"
#include "quintics/report/claim.hpp"

namespace quintics {

/// A term (eta^i mu^j L)^3 with eta^3 = e3, mu^3 = 1/9 and L a linear form; its cube
/// only involves eta^3 and mu^3 and so lives in Q(e3)[x].
struct ScaledCube {
    int eta_power = 0;
    int mu_power = 0;
    E3LinearForm form;

    MultiPoly<CycloNum> expand() const;
};

struct SumOfCubesIdentity {
    MultiPoly<CycloNum> lhs;
    std::vector<ScaledCube> rhs;
};

/// The four sum-of-cubes identities exhibiting the character cubics as Fermat cubics.
/// The third left-hand side is entered with x2 where the printed text has x3.
std::vector<SumOfCubesIdentity> fermat_identities();

/// The four identities, plus the involution x1 <-> x2 on the character cubics and the pencil.
Claims verify_fermat_identities();

/// Expands each printed triangle and pairs it with the lambda for which it is a Hesse member.
struct TrianglePairing {
    CharacterLabel label;
    std::optional<CycloNum> computed_lambda;  ///< nullopt means infinity (the member x0 x1 x2)
    std::optional<CycloNum> printed_lambda;
    bool is_member = false;                   ///< expansion is a multiple of some pencil member
};
std::vector<TrianglePairing> pair_triangles_with_lambda();

/// Triangle expansions, the lambda pairing, and the singular members of the pencil over F_p
/// (p = 1 mod 3) found by direct singular-point search.
Claims verify_triangle_members(std::uint32_t p = 31);

}  // namespace quintics
