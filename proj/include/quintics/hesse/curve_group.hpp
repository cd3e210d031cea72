#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quintics/hesse/plane_cubic.hpp"
#include "quintics/report/claim.hpp"
#include "quintics/scalars/prime_field.hpp"

namespace quintics {

using FpCubic = PlaneCubic<PrimeFieldNum>;
using FpPlanePoint = PlaneCoords<PrimeFieldNum>;

/// The group E(F_p) of a smooth plane cubic, enumerated by brute force over P^2(F_p).
class CurveGroup {
public:
    /// Enumerates all rational points; throws std::domain_error if one of them is singular.
    explicit CurveGroup(FpCubic curve);

    const FpCubic& curve() const { return curve_; }
    std::uint32_t prime() const { return curve_.context().modulus(); }
    const std::vector<FpPlanePoint>& points() const { return points_; }
    std::uint64_t order() const { return points_.size(); }
    const FpPlanePoint& zero() const { return curve_.origin(); }
    bool contains(const FpPlanePoint& p) const;

    /// E(F_p) = Z/n1 x Z/n2 with n1 | n2, derived from prime-power torsion counts.
    std::pair<std::uint64_t, std::uint64_t> structure() const;
    /// Size of E[n] predicted by the structure.
    std::uint64_t predicted_torsion_count(std::uint64_t n) const;
    std::uint64_t point_order(const FpPlanePoint& p) const;
    /// Hasse interval check |N - p - 1| <= 2 sqrt(p).
    bool in_hasse_interval() const;

private:
    FpCubic curve_;
    std::vector<FpPlanePoint> points_;
    mutable std::optional<std::pair<std::uint64_t, std::uint64_t>> structure_;
};

/// All points P of E(F_p) with nP = O.
std::vector<FpPlanePoint> torsion_points(const CurveGroup& g, long n);

/// Point counts of every Hesse member x0^3 + x1^3 + x2^3 + lambda x0 x1 x2 over F_p at once,
/// indexed by lambda (singular members included).
std::vector<std::uint64_t> hesse_point_counts(std::uint32_t p);

struct TorsionWitness {
    std::uint32_t p = 0;
    std::uint32_t lambda = 0;
    std::uint64_t order = 0;
    std::pair<std::uint64_t, std::uint64_t> structure;
    nlohmann::json search_log = nlohmann::json::array();
};

/// First (p, lambda) with full rational n-torsion for every n in `full` (that is, the
/// lcm L of `full` divides n1), scanning `primes` first and then primes q = 1 mod 30
/// up to `bound`. Primes whose Hasse interval holds no multiple of L^2 are skipped
/// with the reason logged.
std::optional<TorsionWitness> find_torsion_witness(const std::vector<std::uint32_t>& primes, const std::vector<int>& full,
                                                   std::uint32_t bound = 2000);

/// Translation by 3-torsion: sigma_3 and tau_3 (via e3 in F_p) move every point by a
/// fixed 3-torsion point.
ClaimRecord verify_heisenberg_translation(const CurveGroup& g);

/// Group-arithmetic content of the two set descriptions and the single solution e = 3p.
Claims verify_intersection_arithmetic(const CurveGroup& g, std::uint64_t seed, int samples = 50);

/// The collinearity reduction and the count of solutions of 5 e0 = 0.
Claims verify_six_secant_criterion(const CurveGroup& g);

}  // namespace quintics
