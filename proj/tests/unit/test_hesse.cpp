#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "quintics/heisenberg/tables.hpp"
#include "quintics/hesse/curve_group.hpp"
#include "quintics/hesse/identities.hpp"
#include "quintics/hesse/suite.hpp"
#include "quintics/scalars/rational.hpp"

using namespace quintics;

namespace {

PrimeFieldNum fp(const PrimeContext& ctx, long long v) { return PrimeFieldNum(ctx, v); }

bool all_pass(const Claims& claims) {
    bool ok = true;
    for (const auto& c : claims) {
        INFO(c.id << " " << c.witness.dump());
        CHECK(c.passed());
        ok = ok && c.passed();
    }
    return ok;
}

// points of x0^3 + x1^3 + x2^3 + lambda x0 x1 x2 by the definition, no shortcuts
std::size_t naive_count(std::uint32_t p, std::uint32_t lambda) {
    const PrimeContext ctx(p);
    const auto lam = fp(ctx, lambda);
    auto on = [&](long a, long b, long c) {
        const auto x = fp(ctx, a), y = fp(ctx, b), z = fp(ctx, c);
        return (x * x * x + y * y * y + z * z * z + lam * x * y * z).is_zero();
    };
    std::size_t n = on(1, 0, 0);
    for (long a = 0; a < p; ++a) n += on(a, 1, 0);
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b) n += on(a, b, 1);
    return n;
}

}  // namespace

TEST_CASE("Fermat identities and the involution") { all_pass(verify_fermat_identities()); }

TEST_CASE("triangles are the singular members") {
    all_pass(verify_triangle_members(31));
    const auto pairing = pair_triangles_with_lambda();
    REQUIRE(pairing.size() == 4);
    for (const auto& t : pairing) CHECK(t.is_member);
    // T(1,0) is the lambda = -3 member and T(0,1) the member x0 x1 x2
    for (const auto& t : pairing) {
        if (t.label == CharacterLabel{1, 0}) CHECK(*t.computed_lambda == CycloNum::from_int({}, -3));
        if (t.label == CharacterLabel{0, 1}) CHECK_FALSE(t.computed_lambda.has_value());
    }
}

TEST_CASE("Fermat member is smooth over F_31") {
    const PrimeContext ctx(31);
    const auto e = FpCubic::hesse(fp(ctx, 0));
    std::size_t singular = 0;
    for (long a = 0; a < 31; ++a)
        for (long b = 0; b < 31; ++b) singular += e.is_singular_at({fp(ctx, a), fp(ctx, b), fp(ctx, 1)});
    CHECK(singular == 0);
    CHECK_NOTHROW(CurveGroup{e});
    CHECK_THROWS_AS(CurveGroup{FpCubic::hesse(fp(ctx, -3))}, std::domain_error);
}

TEST_CASE("point enumeration matches a naive count") {
    for (std::uint32_t p : {31u, 61u}) {
        const auto counts = hesse_point_counts(p);
        for (std::uint32_t lambda : {0u, 1u, 2u, 7u, p - 1}) {
            const PrimeContext ctx(p);
            const auto lam = fp(ctx, lambda);
            const std::size_t naive = naive_count(p, lambda);
            CHECK(counts[lambda] == naive);
            if (!(lam * lam * lam + fp(ctx, 27)).is_zero()) {
                const CurveGroup g(FpCubic::hesse(lam));
                CHECK(g.order() == naive);
                CHECK(g.in_hasse_interval());
            }
        }
    }
}

TEST_CASE("group law axioms on 500 random triples") {
    all_pass(verify_group_law(31, 1, 7));
    all_pass(verify_group_law(61, 5, 8));
    all_pass(verify_group_law(43, 2, 9));  // p = 1 mod 3 but a different curve
}

TEST_CASE("identity and negation") {
    const PrimeContext ctx(61);
    const CurveGroup g(FpCubic::hesse(fp(ctx, 3)));
    const auto& e = g.curve();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto& q = g.points()[rng() % g.points().size()];
        CHECK(e.add(q, g.zero()) == q);
        const auto minus = e.negate(q);
        CHECK(minus == normalize_plane(FpPlanePoint{q[0], q[2], q[1]}));
        // independent oracle: q, -q and the origin are collinear
        const auto& o = g.zero();
        const auto det = q[0] * (minus[1] * o[2] - minus[2] * o[1]) - q[1] * (minus[0] * o[2] - minus[2] * o[0]) +
                         q[2] * (minus[0] * o[1] - minus[1] * o[0]);
        CHECK(det.is_zero());
    }
}

TEST_CASE("add_points on curve points") {
    const PrimeContext ctx(31);
    const auto e = FpCubic::hesse(fp(ctx, 1));
    const CurveGroup g(e);
    const CubicCurvePoint<PrimeFieldNum> a(e, g.points()[3]), b(e, g.points()[7]);
    const auto c = add_points(a, b);
    CHECK(e.contains(c.coords));
    const auto other = FpCubic::hesse(fp(ctx, 2));
    // a point with x0 x1 x2 != 0 lies on exactly one member of the pencil
    const auto off_base = std::find_if(g.points().begin(), g.points().end(), [](const auto& q) { return !(q[0] * q[1] * q[2]).is_zero(); });
    REQUIRE(off_base != g.points().end());
    CHECK_THROWS(CubicCurvePoint<PrimeFieldNum>(other, *off_base).coords);
}

TEST_CASE("group law over the rationals") {
    // E_lambda with lambda = 1 has rational points (1:-1:0), (0:1:-1) and (1:0:-1)
    const auto e = PlaneCubic<Rational>::hesse(Rational(1));
    const PlaneCoords<Rational> p{Rational(1), Rational(-1), Rational(0)}, q{Rational(1), Rational(0), Rational(-1)};
    const auto s = e.add(p, q);
    CHECK(e.contains(s));
    CHECK(e.add(s, e.negate(q)) == normalize_plane(p));
    CHECK(e.add(e.add(p, q), s) == e.add(p, e.add(q, s)));
}

TEST_CASE("torsion points") {
    const PrimeContext ctx(31);
    const CurveGroup g(FpCubic::hesse(fp(ctx, 1)));
    const auto one = torsion_points(g, 1);
    REQUIRE(one.size() == 1);
    CHECK(one.front() == g.zero());
    for (long n : {1, 2, 3, 4, 5, 6, 9, 12}) {
        const auto t = torsion_points(g, n);
        CHECK((static_cast<std::size_t>(n * n)) % t.size() == 0);
        CHECK(t.size() == g.predicted_torsion_count(static_cast<std::uint64_t>(n)));
    }
    CHECK(torsion_points(g, 3).size() == 9);  // base points are rational since 31 = 1 mod 3
    const auto [n1, n2] = g.structure();
    CHECK(n1 * n2 == g.order());
    CHECK(n2 % n1 == 0);
    // exponent oracle: lcm of point orders
    std::uint64_t exponent = 1;
    for (const auto& q : g.points()) exponent = std::lcm(exponent, g.point_order(q));
    CHECK(exponent == n2);
    CHECK_THROWS_AS(torsion_points(g, 0), std::invalid_argument);
}

TEST_CASE("torsion witness and its arithmetic") {
    const auto w = find_torsion_witness({31, 61}, {2, 3, 5});
    REQUIRE(w.has_value());
    CHECK(w->structure.first % 30 == 0);
    CHECK(w->search_log.front()["skipped"].is_string());  // 31 cannot carry 900 | N
    const PrimeContext ctx(w->p);
    const CurveGroup g(FpCubic::hesse(fp(ctx, w->lambda)));
    CHECK(torsion_points(g, 3).size() == 9);
    CHECK(torsion_points(g, 5).size() == 25);
    CHECK(torsion_points(g, 2).size() == 4);
    all_pass({verify_heisenberg_translation(g)});
    all_pass(verify_intersection_arithmetic(g, 3, 10));
    all_pass(verify_six_secant_criterion(g));
}

TEST_CASE("no witness below a small bound") {
    CHECK_FALSE(find_torsion_witness({31, 61}, {2, 3, 5}, 200).has_value());
}
