#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "quintics/moore/moore.hpp"
#include "quintics/probe/scan.hpp"
#include "quintics/report/claim.hpp"
#include "quintics/scalars/prime_field.hpp"

namespace quintics {

/// Outcome of one probe check at one (p, a).
struct ProbeCheck {
    bool ok = false;
    nlohmann::json witness;
};

/// Deterministic generator for a (seed, tag, p, a) combination.
std::mt19937_64 probe_rng(std::uint64_t seed, std::uint32_t tag, std::uint32_t p, std::uint32_t a);

/// Origin (0,a,-1,1,-a), the 5-torsion point (a,-1,1,-a,0) with its shifts, and the
/// Hasse interval.
ProbeCheck check_scan_landmarks(const CurveScan& scan);
/// sigma_5 (rotation) and tau_5 (diagonal e5 powers) permute the scanned points.
ProbeCheck check_scan_h5(const CurveScan& scan);

/// rank M'(P) = 3 at every scanned point.
ProbeCheck check_dual_rank_on_curve(const CurveScan& scan);
/// det M'(l P + m Q) = 0 for random pairs of curve points.
ProbeCheck check_secant_points(const CurveScan& scan, std::size_t samples, std::mt19937_64& rng);
/// Number of F_p-points on the union of secant and tangent lines of a curve with N points:
/// N ((p+1)^2 - N + 1). Two secant lines never meet off the curve.
std::uint64_t secant_variety_count(std::uint32_t p, std::uint64_t n);
/// Fraction of random points of P^4(F_p) on det M' = 0 against the secant-line count, within 5
/// standard deviations; also returns a point off the hypersurface as a witness.
ProbeCheck check_hypersurface_density(const CurveScan& scan, std::size_t samples, std::mt19937_64& rng);
/// Exhaustive count of det M' = 0 over P^4(F_p) compared with secant_variety_count.
ProbeCheck check_secant_variety_count(const CurveScan& scan);

/// Samples y on det M(y) = 0 by slicing random lines and checks the kernels.
struct IncidenceResult {
    ProbeCheck kernels;  ///< kernel dimension >= 1 and det M'(x) = 0 for kernel points
    ProbeCheck duality;  ///< M(y) x^T - M'(x) y^T = 0 on every tested pair
};
IncidenceResult check_incidence(const CurveScan& scan, std::size_t samples, std::mt19937_64& rng);
/// For every curve point x: ker M'(x) is a pencil of y with M(y) x^T = 0 and det M(y) = 0.
ProbeCheck check_cone_pencils(const CurveScan& scan);
/// Number of y in P^4(F_p) with rank M(y) <= 3, against a point-count envelope for a curve.
ProbeCheck check_rank3_locus(std::uint32_t p, std::uint32_t a);

/// Quintic g and five cubics C_j with C_j(Q_0(x), ..., Q_4(x)) = g(x) x_j.
struct CremonaWitness {
    std::uint32_t p = 0, a = 0;
    std::size_t unknowns = 0, equations = 0, kernel_dimension = 0;
    std::vector<MultiPoly<PrimeFieldNum>> cubics;  ///< in y0..y4
    MultiPoly<PrimeFieldNum> g;                    ///< in x0..x4, zero if the system has no usable solution
    bool identity_holds = false;                   ///< checked by exact composition
};
CremonaWitness interpolate_cremona_inverse(const CurveScan& scan);
ProbeCheck check_cremona_round_trip(const CurveScan& scan, const CremonaWitness& w, std::size_t samples, std::mt19937_64& rng);
/// det M(y) = 0 at y = Phi(x) for secant points x, under each pinning y_i = Q_{r(i)}(x).
ProbeCheck check_cremona_secant_image(const CurveScan& scan, std::size_t samples, std::mt19937_64& rng);

}  // namespace quintics
