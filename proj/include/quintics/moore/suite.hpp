#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quintics/moore/moore.hpp"
#include "quintics/report/claim.hpp"
#include "quintics/scalars/cyclo.hpp"
#include "quintics/scalars/prime_field.hpp"
#include "quintics/scalars/rational_function.hpp"

namespace quintics {

using SymbolicScalar = RationalFunction<CycloNum>;

/// The moduli for which the five quadrics do not cut out a smooth curve:
/// 0, infinity (nullopt) and e5^k (e5^2 + e5^3), e5^k (e5 + e5^4) for k = 0..4.
std::vector<std::optional<CycloNum>> excluded_moduli();

/// Residues of the finite excluded moduli in F_p (p = 1 mod 15), zero included.
std::vector<std::uint32_t> excluded_residues(std::uint32_t p);

/// Symbolic checks with a an indeterminate over Q(e15).
Claims verify_moore();
/// The same checks with a fixed value of a in Q(e15); throws for an excluded modulus.
Claims verify_moore_at(const CycloNum& a);

}  // namespace quintics
