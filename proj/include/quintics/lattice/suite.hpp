#pragma once

#include "quintics/lattice/forms.hpp"
#include "quintics/report/claim.hpp"

namespace quintics {

/// Numbers entering the double point formula for the degree 15 abelian surfaces.
struct DoublePointData {
    long long ambient_degree_term = 10;  ///< coefficient of d, from c_2 of the P^4 normal bundle
    long long hk = 25;
    long long k_squared = -25;
    long long euler = 25;
};

/// Positive integer roots d of d^2 = c1 d + c0.
std::vector<long long> positive_integer_roots(long long c1, long long c0);

/// H1 = 2H2 - X: cube of the right side and the vanishing of the fibre coefficient.
Claims verify_hyperplane_relation(const LatticeTables& t);
/// Degree of the abelian surfaces from the double point formula, the branch curve degree on
/// S^2 E and the quintic residual class.
Claims verify_double_point_formula(const LatticeTables& t, const DoublePointData& data = {});
/// Classes and degrees of the degree 15 surfaces and the pencil ledger.
Claims verify_degree15_surfaces(const LatticeTables& t);

/// All lattice claims, starting with the table symmetry check.
Claims verify_lattice(const LatticeTables& t);

}  // namespace quintics
