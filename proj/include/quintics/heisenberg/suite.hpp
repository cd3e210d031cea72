#pragma once

#include "quintics/report/claim.hpp"

namespace quintics {

/// Commutator scalars, the cubic character decomposition, the printed character
/// table and the triangle fixed points.
Claims verify_heisenberg();

}  // namespace quintics
