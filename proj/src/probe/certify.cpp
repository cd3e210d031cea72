#include "quintics/probe/certify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "quintics/scalars/roots.hpp"

namespace quintics {
namespace {

using Fp = PrimeFieldNum;

nlohmann::json render(const RawPoint& x) { return std::vector<std::uint32_t>(x.begin(), x.end()); }

RawPoint random_point(const RawField& f, std::mt19937_64& rng) {
    RawPoint x{};
    do {
        for (auto& c : x) c = static_cast<std::uint32_t>(rng() % f.p());
    } while (is_zero(x));
    return x;
}

RawPoint combine(const RawField& f, std::uint32_t l, const RawPoint& u, std::uint32_t m, const RawPoint& v) {
    RawPoint out{};
    for (std::size_t i = 0; i < 5; ++i) out[i] = f.add(f.mul(l, u[i]), f.mul(m, v[i]));
    return out;
}

// A random point on the line through two distinct curve points, away from the endpoints.
RawPoint random_secant_point(const CurveScan& scan, const RawField& f, std::mt19937_64& rng) {
    const std::size_t n = scan.points.size();
    const std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    const std::uint32_t l = 1 + static_cast<std::uint32_t>(rng() % (f.p() - 1));
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % (f.p() - 1));
    return combine(f, l, scan.points[i], m, scan.points[j]);
}

// Exponent vectors of all monomials of degree d in 5 variables, in a fixed order.
std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c)
                for (int e = d - a - b - c; e >= 0; --e) {
                    Monomial m{};
                    m.e[0] = static_cast<std::uint8_t>(a);
                    m.e[1] = static_cast<std::uint8_t>(b);
                    m.e[2] = static_cast<std::uint8_t>(c);
                    m.e[3] = static_cast<std::uint8_t>(e);
                    m.e[4] = static_cast<std::uint8_t>(d - a - b - c - e);
                    out.push_back(m);
                }
    return out;
}

std::uint32_t eval_raw(const RawField& f, const MultiPoly<Fp>& poly, const RawPoint& x) {
    std::uint32_t acc = 0;
    for (const auto& [m, c] : poly.terms()) {
        std::uint32_t t = c.residue();
        for (std::size_t v = 0; v < 5; ++v)
            for (int k = 0; k < m.e[v]; ++k) t = f.mul(t, x[v]);
        acc = f.add(acc, t);
    }
    return acc;
}

template <typename Visit>
void for_each_projective_point(std::uint32_t p, Visit&& visit) {
    for (std::size_t lead = 0; lead < 5; ++lead) {
        std::uint64_t count = 1;
        for (std::size_t k = lead + 1; k < 5; ++k) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            RawPoint y{};
            y[lead] = 1;
            std::uint64_t rest = idx;
            for (std::size_t k = 4; k > lead; --k) {
                y[k] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            visit(y);
        }
    }
}

std::uint64_t projective_size(std::uint32_t p) {
    const std::uint64_t q = p;
    return 1 + q + q * q + q * q * q + q * q * q * q;
}

}  // namespace

std::uint64_t secant_variety_count(std::uint32_t p, std::uint64_t n) {
    const std::uint64_t q = p + 1;
    return n * (q * q - n + 1);
}

std::mt19937_64 probe_rng(std::uint64_t seed, std::uint32_t tag, std::uint32_t p, std::uint32_t a) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag, p, a};
    return std::mt19937_64(seq);
}

ProbeCheck check_scan_landmarks(const CurveScan& scan) {
    const RawField f(scan.p);
    const std::uint32_t a = scan.a, m1 = f.neg(1), ma = f.neg(a);
    const RawPoint origin{0, a, m1, 1, ma};
    const RawPoint eta{a, m1, 1, ma, 0};
    bool shifts = true;
    for (std::size_t s = 0; s < 5; ++s) {
        RawPoint r{};
        for (std::size_t i = 0; i < 5; ++i) r[i] = eta[(i + s) % 5];
        shifts = shifts && scan.contains(r);
    }
    const double lo = scan.p + 1.0 - 2.0 * std::sqrt(static_cast<double>(scan.p));
    const double hi = scan.p + 1.0 + 2.0 * std::sqrt(static_cast<double>(scan.p));
    ProbeCheck c;
    c.ok = scan.contains(origin) && scan.contains(eta) && shifts && scan.in_hasse_interval();
    c.witness = {{"points", scan.points.size()},
                 {"hasse_interval", {lo, hi}},
                 {"origin_found", scan.contains(origin)},
                 {"eta5_found", scan.contains(eta)},
                 {"eta5_shifts_found", shifts}};
    return c;
}

ProbeCheck check_scan_h5(const CurveScan& scan) {
    const RawField f(scan.p);
    const std::uint32_t e5 = prime_roots(scan.p).power(5, 1).residue();
    auto image_set = [&](auto&& map) {
        std::vector<RawPoint> img;
        for (const auto& x : scan.points) img.push_back(normalize(f, map(x)));
        std::sort(img.begin(), img.end());
        return img == scan.points;
    };
    const bool sigma = image_set([](const RawPoint& x) { return RawPoint{x[1], x[2], x[3], x[4], x[0]}; });
    bool tau = true;
    nlohmann::json per_power;
    for (int k = 1; k <= 2; ++k) {
        const bool ok = image_set([&](const RawPoint& x) {
            RawPoint y{};
            std::uint32_t s = 1, step = 1;
            for (int r = 0; r < k; ++r) step = f.mul(step, e5);
            for (std::size_t i = 0; i < 5; ++i, s = f.mul(s, step)) y[i] = f.mul(s, x[i]);
            return y;
        });
        per_power["e5^" + std::to_string(k) + "i"] = ok;
        tau = tau && ok;
    }
    return {sigma && tau, {{"sigma_permutes", sigma}, {"tau_permutes", per_power}, {"e5", e5}}};
}

ProbeCheck check_dual_rank_on_curve(const CurveScan& scan) {
    const MooreRaw mr(scan.p, scan.a);
    std::map<int, std::size_t> hist;
    for (const auto& x : scan.points) ++hist[rank(mr.field(), mr.dual(x))];
    nlohmann::json h;
    for (const auto& [r, n] : hist) h[std::to_string(r)] = n;
    return {hist.size() == 1 && hist.count(3) == 1, {{"points", scan.points.size()}, {"rank_histogram", h}}};
}

ProbeCheck check_secant_points(const CurveScan& scan, std::size_t samples, std::mt19937_64& rng) {
    const MooreRaw mr(scan.p, scan.a);
    std::size_t vanish = 0;
    nlohmann::json bad = nlohmann::json::array();
    for (std::size_t s = 0; s < samples; ++s) {
        const RawPoint x = random_secant_point(scan, mr.field(), rng);
        if (determinant(mr.field(), mr.dual(x)) == 0) ++vanish;
        else if (bad.size() < 5) bad.push_back(render(x));
    }
    return {vanish == samples, {{"samples", samples}, {"vanishing", vanish}, {"counterexamples", bad}}};
}

ProbeCheck check_hypersurface_density(const CurveScan& scan, std::size_t samples, std::mt19937_64& rng) {
    const MooreRaw mr(scan.p, scan.a);
    std::size_t hits = 0;
    nlohmann::json off;
    for (std::size_t s = 0; s < samples; ++s) {
        const RawPoint x = random_point(mr.field(), rng);
        const std::uint32_t d = determinant(mr.field(), mr.dual(x));
        if (d == 0) ++hits;
        else if (off.is_null()) off = {{"point", render(x)}, {"det", d}};
    }
    const auto n = scan.points.size();
    const double q = static_cast<double>(secant_variety_count(scan.p, n)) / static_cast<double>(projective_size(scan.p));
    const double mean = samples * q;
    const double sd = std::sqrt(samples * q * (1.0 - q));
    const bool ok = std::abs(static_cast<double>(hits) - mean) <= 5.0 * sd;
    return {ok,
            {{"samples", samples},
             {"hits", hits},
             {"expected_fraction", q},
             {"expected_hits", mean},
             {"one_over_p_expectation", samples / static_cast<double>(scan.p)},
             {"envelope", {mean - 5.0 * sd, mean + 5.0 * sd}},
             {"five_over_p_expectation", samples * 5.0 / scan.p},
             {"off_hypersurface_witness", off}}};
}

IncidenceResult check_incidence(const CurveScan& scan, std::size_t samples, std::mt19937_64& rng) {
    const MooreRaw mr(scan.p, scan.a);
    const RawField& f = mr.field();
    std::size_t tested = 0, kernel_ok = 0, dual_ok = 0, pairs = 0, lines = 0, on_curve = 0, pencil_ok = 0;
    std::map<int, std::size_t> ranks;
    std::size_t rank3_line_meets_curve = 0;
    nlohmann::json failures = nlohmann::json::array();
    while (tested < samples && lines < 100 * samples) {
        ++lines;
        const RawPoint y0 = random_point(f, rng), y1 = random_point(f, rng);
        for (std::uint32_t t = 0; t <= f.p() && tested < samples; ++t) {
            const RawPoint y = t == f.p() ? y1 : combine(f, 1, y0, t, y1);
            if (is_zero(y)) continue;
            const RawMatrix m = mr.moore(y);
            if (determinant(f, m) != 0) continue;
            ++tested;
            const int r = rank(f, m);
            ++ranks[r];
            const auto ker = kernel(f, m);
            std::vector<RawPoint> xs = ker;
            if (ker.size() >= 2) xs.push_back(combine(f, 1, ker[0], 1 + static_cast<std::uint32_t>(rng() % (f.p() - 1)), ker[1]));
            bool good = !ker.empty() && static_cast<int>(ker.size()) == 5 - r;
            bool dual_good = true;
            bool meets = false;
            for (const auto& x : xs) {
                ++pairs;
                good = good && determinant(f, mr.dual(x)) == 0;
                const RawPoint lhs = apply(f, m, x), rhs = apply(f, mr.dual(x), y);
                dual_good = dual_good && lhs == rhs && is_zero(lhs);
                if (scan.contains(x)) {
                    meets = true;
                    ++on_curve;
                    // the quadrics singular at a curve point form a pencil
                    pencil_ok += rank(f, mr.dual(x)) == 3;
                }
            }
            if (r == 3 && ker.size() == 2) {
                for (std::uint32_t s = 0; s <= f.p() && !meets; ++s)
                    meets = scan.contains(s == f.p() ? ker[1] : combine(f, 1, ker[0], s, ker[1]));
                rank3_line_meets_curve += meets;
            }
            kernel_ok += good;
            dual_ok += dual_good;
            if ((!good || !dual_good) && failures.size() < 5) failures.push_back(render(y));
        }
    }
    nlohmann::json hist;
    for (const auto& [r, n] : ranks) hist[std::to_string(r)] = n;
    IncidenceResult res;
    res.kernels = {tested == samples && kernel_ok == tested,
                   {{"samples", tested},
                    {"lines_sliced", lines},
                    {"kernel_checks_passed", kernel_ok},
                    {"rank_histogram", hist},
                    {"kernel_points_on_curve", on_curve},
                    {"curve_kernel_points_with_pencil", pencil_ok},
                    {"rank3_kernel_lines_meeting_curve", rank3_line_meets_curve},
                    {"failures", failures}}};
    res.duality = {tested == samples && dual_ok == tested, {{"samples", tested}, {"pairs", pairs}, {"residual_zero", dual_ok}}};
    return res;
}

ProbeCheck check_cone_pencils(const CurveScan& scan) {
    const MooreRaw mr(scan.p, scan.a);
    const RawField& f = mr.field();
    std::size_t ok = 0;
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& x : scan.points) {
        const auto ker = kernel(f, mr.dual(x));
        bool good = ker.size() == 2;
        if (good) {
            for (const auto& y : {ker[0], ker[1], combine(f, 1, ker[0], 1, ker[1])}) {
                const RawMatrix m = mr.moore(y);
                good = good && is_zero(apply(f, m, x)) && determinant(f, m) == 0 && rank(f, m) <= 4;
            }
        }
        ok += good;
        if (!good && bad.size() < 5) bad.push_back(render(x));
    }
    return {ok == scan.points.size(), {{"curve_points", scan.points.size()}, {"pencils_verified", ok}, {"failures", bad}}};
}

ProbeCheck check_secant_variety_count(const CurveScan& scan) {
    const MooreRaw mr(scan.p, scan.a);
    std::uint64_t hits = 0;
    for_each_projective_point(scan.p, [&](const RawPoint& x) { hits += determinant(mr.field(), mr.dual(x)) == 0; });
    const std::uint64_t expected = secant_variety_count(scan.p, scan.points.size());
    return {hits == expected,
            {{"points_scanned", projective_size(scan.p)}, {"det_zero_count", hits}, {"secant_line_count", expected}, {"curve_points", scan.points.size()}}};
}

ProbeCheck check_rank3_locus(std::uint32_t p, std::uint32_t a) {
    const MooreRaw mr(p, a);
    const RawField& f = mr.field();
    std::size_t low = 0;
    for_each_projective_point(p, [&](const RawPoint& y) {
        const RawMatrix m = mr.moore(y);
        if (determinant(f, m) == 0) low += rank(f, m) <= 3;
    });
    // a genus one curve over F_p has a point count in the Hasse interval
    const double centre = p + 1.0;
    const double slack = 2.0 * std::sqrt(static_cast<double>(p));
    const bool ok = std::abs(static_cast<double>(low) - centre) <= slack;
    return {ok,
            {{"prime", p},
             {"a", a},
             {"points_scanned", projective_size(p)},
             {"rank_at_most_3", low},
             {"expected", centre},
             {"envelope", {centre - slack, centre + slack}},
             {"ten_p_heuristic", 10.0 * p}}};
}

CremonaWitness interpolate_cremona_inverse(const CurveScan& scan) {
    const PrimeContext ctx(scan.p);
    const MooreSystem<Fp> ms(Fp(ctx, scan.a), false);
    const RawField f(scan.p);
    const auto cubic_monos = monomials_of_degree(3);   // 35
    const auto quintic_monos = monomials_of_degree(5);  // 126
    const auto sextic_monos = monomials_of_degree(6);   // 210
    std::map<Monomial, std::size_t, GrevlexLess> row_of;
    for (std::size_t i = 0; i < sextic_monos.size(); ++i) row_of[sextic_monos[i]] = i;

    // Q^m for each cubic monomial m in y
    std::vector<MultiPoly<Fp>> composed;
    for (const auto& m : cubic_monos) {
        MultiPoly<Fp> t = MultiPoly<Fp>::constant(ms.x_ring(), 1);
        for (std::size_t v = 0; v < 5; ++v) t = t * ms.quadrics()[v].pow(m.e[v]);
        composed.push_back(std::move(t));
    }
    const std::size_t nc = cubic_monos.size(), ng = quintic_monos.size();
    const std::size_t cols = 5 * nc + ng;
    const std::size_t rows = 5 * sextic_monos.size();
    std::vector<std::uint32_t> mat(rows * cols, 0);
    for (std::size_t j = 0; j < 5; ++j) {
        const std::size_t base = j * sextic_monos.size();
        for (std::size_t k = 0; k < nc; ++k)
            for (const auto& [mono, c] : composed[k].terms()) mat[(base + row_of.at(mono)) * cols + j * nc + k] = c.residue();
        for (std::size_t k = 0; k < ng; ++k) {
            Monomial m = quintic_monos[k];
            m.e[j] = static_cast<std::uint8_t>(m.e[j] + 1);
            mat[(base + row_of.at(m)) * cols + 5 * nc + k] = f.neg(1);
        }
    }
    const auto ker = dense_kernel(f, mat, rows, cols);

    CremonaWitness w;
    w.p = scan.p;
    w.a = scan.a;
    w.unknowns = cols;
    w.equations = rows;
    w.kernel_dimension = ker.size();
    w.g = MultiPoly<Fp>(ms.x_ring());
    for (const auto& v : ker) {
        bool g_nonzero = false;
        for (std::size_t k = 0; k < ng; ++k) g_nonzero = g_nonzero || v[5 * nc + k] != 0;
        if (!g_nonzero) continue;
        for (std::size_t j = 0; j < 5; ++j) {
            MultiPoly<Fp> c(ms.y_ring());
            for (std::size_t k = 0; k < nc; ++k) c.add_term(cubic_monos[k], Fp(ctx, v[j * nc + k]));
            w.cubics.push_back(std::move(c));
        }
        for (std::size_t k = 0; k < ng; ++k) w.g.add_term(quintic_monos[k], Fp(ctx, v[5 * nc + k]));
        break;
    }
    if (!w.g.is_zero()) {
        // exact composition C_j(Q) = g x_j
        bool ok = true;
        for (std::size_t j = 0; j < 5; ++j) ok = ok && w.cubics[j].substitute(ms.quadrics()) == w.g * MultiPoly<Fp>::variable(ms.x_ring(), j);
        w.identity_holds = ok;
    }
    return w;
}

ProbeCheck check_cremona_round_trip(const CurveScan& scan, const CremonaWitness& w, std::size_t samples, std::mt19937_64& rng) {
    if (w.g.is_zero()) return {false, {{"reason", "no inverse with nonzero g"}}};
    const MooreRaw mr(scan.p, scan.a);
    const RawField& f = mr.field();
    std::size_t tested = 0, agree = 0, base_skips = 0, attempts = 0;
    nlohmann::json skipped = nlohmann::json::array();
    while (tested < samples && attempts < 100 * samples) {
        ++attempts;
        const RawPoint x = random_point(f, rng);
        const RawPoint y = mr.quadrics(x);
        const std::uint32_t gx = eval_raw(f, w.g, x);
        if (is_zero(y) || gx == 0) {
            ++base_skips;
            if (skipped.size() < 10) skipped.push_back(render(x));
            continue;
        }
        ++tested;
        RawPoint back{};
        for (std::size_t j = 0; j < 5; ++j) back[j] = eval_raw(f, w.cubics[j], y);
        bool ok = !is_zero(back) && normalize(f, back) == normalize(f, x);
        // exact form: Psi(Phi(x)) = g(x) x
        for (std::size_t j = 0; j < 5; ++j) ok = ok && back[j] == f.mul(gx, x[j]);
        agree += ok;
    }
    return {tested == samples && agree + 2 >= samples,
            {{"samples", tested}, {"round_trips", agree}, {"base_locus_skips", base_skips}, {"skipped_points", skipped}}};
}

ProbeCheck check_cremona_secant_image(const CurveScan& scan, std::size_t samples, std::mt19937_64& rng) {
    const MooreRaw mr(scan.p, scan.a);
    const RawField& f = mr.field();
    const auto reindexings = all_reindexings();
    std::vector<std::size_t> vanish(reindexings.size(), 0);
    std::size_t tested = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const RawPoint x = random_secant_point(scan, f, rng);
        const RawPoint q = mr.quadrics(x);
        if (is_zero(q)) continue;  // x on the curve itself
        ++tested;
        for (std::size_t r = 0; r < reindexings.size(); ++r) {
            RawPoint y{};
            for (long i = 0; i < 5; ++i) y[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(reindexings[r](i))];
            vanish[r] += determinant(f, mr.moore(y)) == 0;
        }
    }
    nlohmann::json holding = nlohmann::json::array(), counts;
    for (std::size_t r = 0; r < reindexings.size(); ++r) {
        counts[reindexings[r].to_string()] = vanish[r];
        if (vanish[r] == tested && tested > 0) holding.push_back(reindexings[r].to_string());
    }
    // the pinning from 2 Q_{3i} = x M(e_i) x^T reads y_i against Q_{3i}; the reindexing search
    // reports which identifications actually land in det M = 0
    const bool stated = vanish[static_cast<std::size_t>(std::find(reindexings.begin(), reindexings.end(), Reindexing{3, 0}) - reindexings.begin())] == tested;
    return {!holding.empty() && tested == samples,
            {{"samples", tested},
             {"pinning_3i_holds", stated},
             {"holding_pinnings", holding},
             {"working_pinning", holding.empty() ? nlohmann::json(nullptr) : holding.front()},
             {"vanishing_counts", counts}}};
}

}  // namespace quintics
