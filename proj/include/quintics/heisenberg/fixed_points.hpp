#pragma once

#include <array>
#include <vector>

#include "quintics/heisenberg/tables.hpp"
#include "quintics/report/claim.hpp"

namespace quintics {

using PlanePoint = std::array<CycloNum, 3>;

/// Scales a nonzero point so its first nonzero coordinate is 1.
PlanePoint normalize_point(const PlanePoint& p);

/// Fixed points in P^2 of sigma_3^i tau_3^j (coordinate convention), as eigenvectors of
/// its point map p -> G p. Rejects (i, j) = (0, 0) mod 3.
std::vector<PlanePoint> fixed_points_of_subgroup(int i, int j);

/// Pairwise intersections of the three lines of a triangle.
std::vector<PlanePoint> triangle_vertices(const PrintedTriangle& t);

/// Compares fixed points with triangle vertices for each printed triangle.
Claims verify_triangle_fixed_points();

}  // namespace quintics
