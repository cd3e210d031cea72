#include "quintics/hesse/curve_group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "quintics/scalars/roots.hpp"

namespace quintics {
namespace {

using u64 = std::uint64_t;

bool point_less(const FpPlanePoint& a, const FpPlanePoint& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (a[i].residue() != b[i].residue()) return a[i].residue() < b[i].residue();
    }
    return false;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> f;
    for (u64 q = 2; q * q <= n; ++q) {
        int a = 0;
        while (n % q == 0) {
            n /= q;
            ++a;
        }
        if (a) f.emplace_back(q, a);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

u64 ipow(u64 b, int e) {
    u64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::string render(const FpPlanePoint& p) {
    return "(" + p[0].to_string() + ":" + p[1].to_string() + ":" + p[2].to_string() + ")";
}

std::size_t two_torsion_abscissae(u64 p, u64 lambda) {
    std::size_t roots = 0;
    for (u64 t = 0; t < p; ++t) roots += (t * t % p * t + lambda * t + 2) % p == 0;
    return roots;
}

}  // namespace

CurveGroup::CurveGroup(FpCubic curve) : curve_(std::move(curve)) {
    const PrimeContext& ctx = curve_.context();
    const u64 p = ctx.modulus();
    // raw evaluation F(x0, x1, x2) with per-term coefficient residues
    struct RawTerm {
        int e0, e1, e2;
        u64 c;
    };
    std::vector<RawTerm> terms;
    for (const auto& t : curve_.terms()) terms.push_back({t.e[0], t.e[1], t.e[2], t.c.residue()});
    std::vector<std::array<u64, 4>> pw(p);
    for (u64 v = 0; v < p; ++v) pw[v] = {1, v, v * v % p, v * v % p * v % p};
    auto eval = [&](u64 a, u64 b, u64 c) {
        u64 acc = 0;
        for (const auto& t : terms) acc = (acc + t.c * (pw[a][t.e0] * pw[b][t.e1] % p) % p * pw[c][t.e2]) % p;
        return acc;
    };
    auto push = [&](u64 a, u64 b, u64 c) {
        const FpPlanePoint pt = normalize_plane(FpPlanePoint{PrimeFieldNum(ctx, static_cast<long long>(a)),
                                                             PrimeFieldNum(ctx, static_cast<long long>(b)),
                                                             PrimeFieldNum(ctx, static_cast<long long>(c))});
        if (curve_.is_singular_at(pt)) throw std::domain_error("cubic is singular at " + render(pt));
        points_.push_back(pt);
    };
    if (eval(1, 0, 0) == 0) push(1, 0, 0);
    for (u64 a = 0; a < p; ++a) {
        if (eval(a, 1, 0) == 0) push(a, 1, 0);
    }
    for (u64 a = 0; a < p; ++a)
        for (u64 b = 0; b < p; ++b) {
            if (eval(a, b, 1) == 0) push(a, b, 1);
        }
    std::sort(points_.begin(), points_.end(), point_less);
}

bool CurveGroup::contains(const FpPlanePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), normalize_plane(p), point_less);
}

std::pair<u64, u64> CurveGroup::structure() const {
    if (structure_) return *structure_;
    const u64 n = order();
    u64 n1 = 1;
    for (const auto& [q, a] : factorize(n)) {
        // q-part is Z/q^i x Z/q^j with i <= j; i is the largest k with |E[q^k]| = q^{2k}
        int i = 0;
        for (int k = 1; 2 * k <= a; ++k) {
            const u64 qk = ipow(q, k);
            if (torsion_points(*this, static_cast<long>(qk)).size() == qk * qk) i = k;
            else break;
        }
        n1 *= ipow(q, i);
    }
    structure_ = std::make_pair(n1, n / n1);
    return *structure_;
}

u64 CurveGroup::predicted_torsion_count(u64 n) const {
    const auto [n1, n2] = structure();
    return std::gcd(n, n1) * std::gcd(n, n2);
}

u64 CurveGroup::point_order(const FpPlanePoint& pt) const {
    u64 ord = order();
    for (const auto& [q, a] : factorize(ord)) {
        (void)a;
        while (ord % q == 0 && curve_.multiply(static_cast<long>(ord / q), pt) == zero()) ord /= q;
    }
    return ord;
}

bool CurveGroup::in_hasse_interval() const {
    const double p = prime();
    const double n = static_cast<double>(order());
    return std::abs(n - p - 1.0) <= 2.0 * std::sqrt(p);
}

std::vector<FpPlanePoint> torsion_points(const CurveGroup& g, long n) {
    if (n < 1) throw std::invalid_argument("torsion order must be positive");
    std::vector<FpPlanePoint> out;
    for (const auto& pt : g.points()) {
        if (g.curve().multiply(n, pt) == g.zero()) out.push_back(pt);
    }
    return out;
}

std::vector<u64> hesse_point_counts(std::uint32_t p) {
    (void)PrimeContext(p);
    std::vector<u64> inv(p, 0);
    for (u64 v = 1; v < p; ++v) inv[v] = PrimeFieldNum(PrimeContext::unchecked(p), static_cast<long long>(v)).inverse().residue();
    std::vector<u64> cube(p);
    for (u64 v = 0; v < p; ++v) cube[v] = v * v % p * v % p;
    u64 cube_roots_of_minus_one = 0;
    for (u64 v = 0; v < p; ++v) cube_roots_of_minus_one += (cube[v] + 1) % p == 0;
    // points with x0 x1 x2 = 0 do not depend on lambda: (0:b:1), (a:0:1), (a:1:0)
    std::vector<u64> count(p, 3 * cube_roots_of_minus_one);
    for (u64 a = 1; a < p; ++a)
        for (u64 b = 1; b < p; ++b) {
            // a^3 + b^3 + 1 + lambda a b = 0 determines lambda
            const u64 s = (cube[a] + cube[b] + 1) % p;
            const u64 lambda = (p - s) % p * inv[a * b % p] % p;
            ++count[lambda];
        }
    return count;
}

std::optional<TorsionWitness> find_torsion_witness(const std::vector<std::uint32_t>& primes, const std::vector<int>& full,
                                                   std::uint32_t bound) {
    u64 l = 1;
    for (int n : full) l = std::lcm(l, static_cast<u64>(n));
    const u64 need = l * l;
    std::vector<std::uint32_t> order = primes;
    for (std::uint32_t q = 31; q <= bound; q += 30) {
        if (is_prime(q) && std::find(order.begin(), order.end(), q) == order.end()) order.push_back(q);
    }
    TorsionWitness w;
    for (std::uint32_t p : order) {
        const double lo = p + 1.0 - 2.0 * std::sqrt(static_cast<double>(p));
        const double hi = p + 1.0 + 2.0 * std::sqrt(static_cast<double>(p));
        const u64 first = static_cast<u64>(std::ceil(lo / static_cast<double>(need))) * need;
        if (static_cast<double>(first) > hi) {
            w.search_log.push_back({{"p", p}, {"skipped", "no multiple of " + std::to_string(need) + " in the Hasse interval"}});
            continue;
        }
        if ((p - 1) % l != 0) {
            w.search_log.push_back({{"p", p}, {"skipped", "full torsion needs p = 1 mod " + std::to_string(l)}});
            continue;
        }
        const auto counts = hesse_point_counts(p);
        const bool want_two = std::find(full.begin(), full.end(), 2) != full.end() || l % 2 == 0;
        int tried = 0, filtered = 0;
        for (std::uint32_t lambda = 0; lambda < p; ++lambda) {
            if (counts[lambda] % need != 0) continue;
            const PrimeContext ctx(p);
            const PrimeFieldNum lam(ctx, lambda);
            if ((lam * lam * lam + PrimeFieldNum(ctx, 27)).is_zero()) continue;  // singular member
            // the nonzero 2-torsion points are (t:1:1) with t^3 + lambda t + 2 = 0
            if (want_two && two_torsion_abscissae(p, lambda) != 3) {
                ++filtered;
                continue;
            }
            ++tried;
            const CurveGroup g(FpCubic::hesse(lam));
            if (g.structure().first % l == 0) {
                w.p = p;
                w.lambda = lambda;
                w.order = g.order();
                w.structure = g.structure();
                w.search_log.push_back({{"p", p}, {"lambda", lambda}, {"candidates_enumerated", tried}, {"rejected_by_two_torsion", filtered}, {"found", true}});
                return w;
            }
        }
        w.search_log.push_back({{"p", p}, {"candidates_enumerated", tried}, {"rejected_by_two_torsion", filtered}, {"found", false}});
    }
    return std::nullopt;
}

ClaimRecord verify_heisenberg_translation(const CurveGroup& g) {
    const std::uint32_t p = g.prime();
    const auto& curve = g.curve();
    if (!curve.is_hesse()) throw std::invalid_argument("translation check needs a Hesse member");
    const CycloEmbedding phi(p);
    const PrimeFieldNum e3 = phi(cyclo_root_of_unity(3, 1));
    const PrimeFieldNum e3inv = e3.inverse();
    // point maps p -> G p: sigma gives (p2, p0, p1); tau gives (p0, e3^-1 p1, e3^-2 p2)
    auto sigma = [](const FpPlanePoint& q) { return normalize_plane(FpPlanePoint{q[2], q[0], q[1]}); };
    auto tau = [&](const FpPlanePoint& q) { return normalize_plane(FpPlanePoint{q[0], e3inv * q[1], e3inv * e3inv * q[2]}); };
    const FpPlanePoint ts = sigma(g.zero()), tt = tau(g.zero());
    bool ok = g.contains(ts) && g.contains(tt) && curve.multiply(3, ts) == g.zero() && curve.multiply(3, tt) == g.zero() &&
              ts != g.zero() && tt != g.zero();
    std::size_t checked = 0;
    for (const auto& q : g.points()) {
        ok = ok && sigma(q) == curve.add(q, ts) && tau(q) == curve.add(q, tt);
        ++checked;
    }
    auto c = hard_claim("hesse.heisenberg-translation", "sigma_3 and tau_3 act on the curve as translations by 3-torsion points", ok,
                        {{"prime", p}, {"points_checked", checked}, {"sigma_translate", render(ts)}, {"tau_translate", render(tt)}});
    c.suite = "hesse";
    return c;
}

Claims verify_intersection_arithmetic(const CurveGroup& g, u64 seed, int samples) {
    Claims claims;
    const auto& curve = g.curve();
    const auto five = torsion_points(g, 5);
    std::vector<FpPlanePoint> m2, m3, m5, sum32;
    for (const auto& q : g.points()) {
        m2.push_back(curve.multiply(2, q));
        m3.push_back(curve.add(m2.back(), q));
        m5.push_back(curve.multiply(5, q));
        sum32.push_back(curve.add(m3.back(), m2.back()));
    }
    {
        // {(q, r): 3r + 2q = 0} meets the diagonal in {(p, p): 5p = 0}
        std::size_t diag = 0;
        bool agree = true;
        for (std::size_t i = 0; i < g.points().size(); ++i) {
            const bool lhs = curve.add(m3[i], m2[i]) == g.zero();
            const bool rhs = m5[i] == g.zero();
            agree = agree && lhs == rhs;
            diag += lhs;
        }
        claims.push_back(hard_claim("hesse.diagonal-five-torsion", "3r + 2q = 0 meets the diagonal exactly in the 5-torsion",
                                    agree && diag == five.size(), {{"diagonal_solutions", diag}, {"five_torsion", five.size()}}));
    }
    {
        // the translated version for each nonzero 3-torsion point t
        const auto three = torsion_points(g, 3);
        bool ok = true;
        nlohmann::json counts = nlohmann::json::array();
        for (const auto& t : three) {
            if (t == g.zero()) continue;
            const auto minus_t = curve.negate(t);
            std::size_t lhs_count = 0, rhs_count = 0;
            for (std::size_t i = 0; i < g.points().size(); ++i) {
                const bool lhs = sum32[i] == minus_t;
                const bool rhs = m5[i] == minus_t;
                ok = ok && lhs == rhs;
                lhs_count += lhs;
                rhs_count += rhs;
            }
            ok = ok && lhs_count == rhs_count && lhs_count == five.size();
            counts.push_back(lhs_count);
        }
        claims.push_back(hard_claim("hesse.diagonal-translated", "3r + 2q = -t meets the diagonal in {5p = -t} for each 3-torsion t",
                                    ok, {{"solutions_per_t", counts}}));
    }
    {
        std::mt19937_64 rng(seed);
        bool ok = true;
        nlohmann::json bad = nlohmann::json::array();
        for (int s = 0; s < samples; ++s) {
            const auto& q = g.points()[rng() % g.points().size()];
            std::vector<FpPlanePoint> sols;
            for (std::size_t i = 0; i < g.points().size(); ++i) {
                const auto r = curve.add(curve.negate(g.points()[i]), q);
                const auto r2 = curve.add(r, r);
                if (curve.add(curve.add(r2, r), m2[i]) == g.zero()) sols.push_back(g.points()[i]);
            }
            const bool good = sols.size() == 1 && sols.front() == curve.multiply(3, q);
            if (!good) bad.push_back(render(q));
            ok = ok && good;
        }
        claims.push_back(hard_claim("hesse.unique-solution", "3(-e + p) + 2e = 0 has the single solution e = 3p", ok,
                                    {{"samples", samples}, {"failures", bad}, {"seed", seed}}));
    }
    for (auto& c : claims) c.suite = "hesse";
    return claims;
}

Claims verify_six_secant_criterion(const CurveGroup& g) {
    Claims claims;
    const auto& curve = g.curve();
    const auto two = torsion_points(g, 2);
    const auto three = torsion_points(g, 3);
    const auto five = torsion_points(g, 5);
    std::vector<FpPlanePoint> tau2, tau3;
    for (const auto& t : two)
        if (t != g.zero()) tau2.push_back(t);
    for (const auto& t : three)
        if (t != g.zero()) tau3.push_back(t);
    const bool full = two.size() == 4 && three.size() == 9 && five.size() == 25;
    {
        FpPlanePoint sum = g.zero();
        for (const auto& t : tau2) sum = curve.add(sum, t);
        bool three_ok = true;
        for (const auto& t : tau3) three_ok = three_ok && curve.multiply(3, t) == g.zero();
        claims.push_back(hard_claim("hesse.torsion-counts", "witness curve has 4 two-torsion, 9 three-torsion and 25 five-torsion points",
                                    full && sum == g.zero() && three_ok,
                                    {{"prime", g.prime()},
                                     {"order", g.order()},
                                     {"structure", {g.structure().first, g.structure().second}},
                                     {"two_torsion", two.size()},
                                     {"three_torsion", three.size()},
                                     {"five_torsion", five.size()},
                                     {"nonzero_two_torsion_sum_is_zero", sum == g.zero()}}));
    }
    {
        // p_i = e0 + t + tau_i; sum p_i + 2 e0 = 3 e0 + 3t + sum tau_i + 2 e0 = 5 e0
        std::size_t tested = 0, failures = 0, collinear = 0;
        for (const auto& e0 : g.points()) {
            const FpPlanePoint five_e0 = curve.multiply(5, e0);
            for (const auto& t : tau3) {
                FpPlanePoint sum = curve.multiply(2, e0);
                for (const auto& ti : tau2) sum = curve.add(sum, curve.add(curve.add(e0, t), ti));
                ++tested;
                failures += sum != five_e0;
                collinear += five_e0 == g.zero();
            }
        }
        std::size_t solutions = 0;
        for (const auto& e0 : g.points()) solutions += curve.multiply(5, e0) == g.zero();
        claims.push_back(hard_claim("hesse.six-secant-reduction", "sum p_i + 2 e0 = 5 e0 for every e0 and 3-torsion t", failures == 0 && tested > 0,
                                    {{"pairs_tested", tested}, {"failures", failures}, {"collinear_pairs", collinear}}));
        claims.push_back(hard_claim("hesse.six-secant-count", "5 e0 = 0 has exactly 25 solutions", solutions == 25,
                                    {{"solutions", solutions}}));
    }
    for (auto& c : claims) c.suite = "hesse";
    return claims;
}

}  // namespace quintics
