#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "quintics/moore/suite.hpp"
#include "quintics/scalars/roots.hpp"

using namespace quintics;

namespace {

using Fp = PrimeFieldNum;

std::vector<Fp> random_point(const PrimeContext& ctx, std::mt19937_64& rng) {
    std::vector<Fp> v;
    do {
        v.clear();
        for (int i = 0; i < 5; ++i) v.emplace_back(ctx, static_cast<long long>(rng() % ctx.modulus()));
    } while (std::all_of(v.begin(), v.end(), [](const Fp& c) { return c.is_zero(); }));
    return v;
}

// Leibniz formula over all 120 permutations
Fp leibniz(const Matrix<Fp>& m) {
    std::array<std::size_t, 5> perm{0, 1, 2, 3, 4};
    Fp acc = Fp::zero(m.context());
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) inversions += perm[i] > perm[j];
        Fp t = Fp::one(m.context());
        for (std::size_t i = 0; i < 5; ++i) t = t * m(i, perm[i]);
        acc = inversions % 2 ? acc - t : acc + t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace

TEST_CASE("symbolic suite") {
    for (const auto& c : verify_moore()) {
        INFO(c.id << " " << c.witness.dump());
        CHECK(c.passed());
    }
}

TEST_CASE("suite at fixed values of a") {
    for (long v : {2L, 3L, -5L}) {
        const Claims claims = verify_moore_at(CycloNum(v));
        CHECK(claims.size() == 9);
        for (const auto& c : claims) {
            INFO(v << " " << c.id << " " << c.witness.dump());
            CHECK(c.passed());
        }
    }
    CHECK_THROWS_AS(verify_moore_at(CycloNum(0)), std::invalid_argument);
    CHECK_THROWS_AS(verify_moore_at(*excluded_moduli()[4]), std::invalid_argument);
}

TEST_CASE("M(e0) and the quadric Q0") {
    const PrimeContext ctx(31);
    const MooreSystem<Fp> ms(Fp(ctx, 2), false);
    std::vector<Fp> e0(5, Fp::zero(ctx));
    e0[0] = Fp::one(ctx);
    const auto m = ms.moore_at(e0);
    CHECK(m(0, 0) == Fp(ctx, 2));
    // 2 Q_{3*0} = 2 Q_0
    CHECK(ms.quadratic_form(0) == ms.quadrics()[0].scaled(Fp(ctx, 2)));
    // M(e_1) gives 2 Q_3
    CHECK(ms.quadratic_form(1) == ms.quadrics()[3].scaled(Fp(ctx, 2)));
}

TEST_CASE("hand Jacobian of Q0") {
    // Q0 = x0^2 + a x2 x3 - (1/a) x1 x4 with a = 3 over F_31
    const PrimeContext ctx(31);
    const Fp a(ctx, 3), inv = a.inverse();
    const MooreSystem<Fp> ms(a, false);
    const auto& r = ms.x_ring();
    auto x = [&](std::size_t i) { return MultiPoly<Fp>::variable(r, i); };
    const std::array<MultiPoly<Fp>, 5> grad{x(0).scaled(Fp(ctx, 2)), x(4).scaled(-inv), x(3).scaled(a), x(2).scaled(a), x(1).scaled(-inv)};
    // Q0 = Q_{3*0} sits in column 0 of M'
    for (std::size_t i = 0; i < 5; ++i) CHECK(ms.dual()(i, 0) == grad[i]);
}

TEST_CASE("determinants match a Leibniz oracle over F_31") {
    const PrimeContext ctx(31);
    const MooreSystem<Fp> ms(Fp(ctx, 2), false);
    const auto [dm, dmp] = quintic_equations(ms);
    std::mt19937_64 rng(5);
    for (int s = 0; s < 100; ++s) {
        const auto y = random_point(ctx, rng);
        const auto x = random_point(ctx, rng);
        CHECK(dm.evaluate(y) == leibniz(ms.moore_at(y)));
        CHECK(dmp.evaluate(x) == leibniz(ms.dual_at(x)));
        CHECK(ms.moore().evaluate(y) == ms.moore_at(y));
        CHECK(ms.dual().evaluate(x) == ms.dual_at(x));
    }
}

TEST_CASE("symbolic determinant specializes to the numeric one") {
    const MooreSystem<SymbolicScalar> sym(SymbolicScalar::parameter({}), true);
    const auto det_sym = quintic_equations(sym).first;
    const std::uint32_t p = 61;
    const CycloEmbedding phi(p);
    const PrimeContext ctx(p);
    for (long av : {2, 5, 17}) {
        const Fp a(ctx, av);
        const MooreSystem<Fp> num(a, false);
        const auto det_num = quintic_equations(num).first;
        // symbolic objects carry a factor a per entry, so a^5 overall
        const auto ring = num.y_ring();
        const auto specialized = det_sym.map_coefficients<Fp>(ring, [&](const SymbolicScalar& c) {
            Fp n = Fp::zero(ctx), d = Fp::zero(ctx), pw = Fp::one(ctx);
            for (int k = 0; k <= c.numerator().degree(); ++k, pw = pw * a) n = n + phi(c.numerator().coeff(k)) * pw;
            pw = Fp::one(ctx);
            for (int k = 0; k <= c.denominator().degree(); ++k, pw = pw * a) d = d + phi(c.denominator().coeff(k)) * pw;
            return n * d.inverse();
        });
        CHECK(specialized == det_num.scaled(pow(a, 5)));
    }
}

TEST_CASE("incidence duality on 500 random pairs") {
    const PrimeContext ctx(31);
    const MooreSystem<Fp> ms(Fp(ctx, 2), false);
    std::mt19937_64 rng(17);
    std::size_t nonzero = 0;
    for (int s = 0; s < 500; ++s) {
        const auto x = random_point(ctx, rng), y = random_point(ctx, rng);
        std::array<Fp, 5> r{};
        REQUIRE_NOTHROW(r = incidence_residual<Fp>(ms, x, y));
        // direct oracle: sum_j y_{i+j} z_{i-j} x_j
        for (long i = 0; i < 5; ++i) {
            Fp acc = Fp::zero(ctx);
            for (long j = 0; j < 5; ++j) acc = acc + y[static_cast<std::size_t>(mod5(i + j))] * ms.z(i - j) * x[static_cast<std::size_t>(j)];
            CHECK(r[static_cast<std::size_t>(i)] == acc);
        }
        nonzero += std::any_of(r.begin(), r.end(), [](const Fp& c) { return !c.is_zero(); });
    }
    CHECK(nonzero > 450);
    const std::vector<Fp> zero(5, Fp::zero(ctx));
    CHECK_THROWS_AS(incidence_residual<Fp>(ms, zero, random_point(ctx, rng)), std::invalid_argument);
}

TEST_CASE("kernel points of rank-4 Moore matrices lie on det M' = 0") {
    const PrimeContext ctx(31);
    const MooreSystem<Fp> ms(Fp(ctx, 2), false);
    std::mt19937_64 rng(23);
    int found = 0;
    for (int line = 0; line < 40 && found < 20; ++line) {
        const auto y0 = random_point(ctx, rng), y1 = random_point(ctx, rng);
        for (long t = 0; t < 31; ++t) {
            std::vector<Fp> y(5, Fp::zero(ctx));
            for (std::size_t i = 0; i < 5; ++i) y[i] = y0[i] + Fp(ctx, t) * y1[i];
            if (std::all_of(y.begin(), y.end(), [](const Fp& c) { return c.is_zero(); })) continue;
            const auto m = ms.moore_at(y);
            if (m.rank() != 4) continue;
            const auto ker = m.kernel();
            REQUIRE(ker.size() == 1);
            CHECK(ms.dual_at(ker.front()).determinant().is_zero());
            ++found;
        }
    }
    CHECK(found >= 10);
}

TEST_CASE("excluded moduli are the icosahedron vertices") {
    const auto ex = excluded_moduli();
    REQUIRE(ex.size() == 12);
    CHECK(std::count(ex.begin(), ex.end(), std::nullopt) == 1);
    int roots = 0;
    for (const auto& e : ex) {
        if (!e || e->is_zero()) continue;
        // nonzero finite vertices are the roots of a^10 + 11 a^5 - 1
        const CycloNum a5 = pow(*e, 5);
        CHECK((a5 * a5 + CycloNum(11) * a5 - CycloNum(1)).is_zero());
        ++roots;
    }
    CHECK(roots == 10);
    const auto r31 = excluded_residues(31);
    CHECK(r31.size() == 11);
    CHECK(std::binary_search(r31.begin(), r31.end(), 0u));
    CHECK_THROWS(MooreSystem<Fp>(Fp::zero(PrimeContext(31)), false));
}
