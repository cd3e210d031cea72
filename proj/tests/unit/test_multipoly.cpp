#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "quintics/poly/poly_matrix.hpp"
#include "quintics/scalars/prime_field.hpp"
#include "quintics/scalars/rational.hpp"
#include "quintics/scalars/rational_function.hpp"

using namespace quintics;

namespace {

using FP = PrimeFieldNum;

MultiPoly<FP> random_poly(const RingPtr<FP>& r, std::mt19937_64& rng, int max_deg, int terms) {
    std::uniform_int_distribution<int> coef(0, static_cast<int>(r->ctx.modulus()) - 1), ex(0, max_deg);
    MultiPoly<FP> f(r);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (std::size_t i = 0; i < r->size(); ++i) m.e[i] = static_cast<std::uint8_t>(ex(rng) % 2);
        f.add_term(m, FP(r->ctx, coef(rng)));
    }
    return f;
}

// Leibniz formula over all permutations: independent of both elimination routes.
template <Field K>
K leibniz(const Matrix<K>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    K acc = K::zero(m.context());
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        K t = K::one(m.context());
        for (std::size_t i = 0; i < n; ++i) t = t * m(i, perm[i]);
        acc = inversions % 2 ? acc - t : acc + t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace

TEST_CASE("grevlex ordering and rendering") {
    auto r = make_ring<Rational>("x", 3);
    auto x0 = MultiPoly<Rational>::variable(r, 0), x1 = MultiPoly<Rational>::variable(r, 1), x2 = MultiPoly<Rational>::variable(r, 2);
    auto f = x0 * x0 + x1 * x2.scaled(Rational(-3)) + x2 + MultiPoly<Rational>::constant(r, 1);
    CHECK(f.to_string() == "x0^2 - 3*x1*x2 + x2 + 1");
    CHECK(f.degree() == 2);
    CHECK_FALSE(f.is_homogeneous());
    CHECK((x0 * x1 + x2 * x2).is_homogeneous());
    CHECK(monomials_of_degree(3, 3).size() == 10);
    CHECK(monomials_of_degree(5, 2).size() == 15);
}

TEST_CASE("partial derivatives") {
    auto r = make_ring<Rational>("x", 5);
    auto x0 = MultiPoly<Rational>::variable(r, 0), x1 = MultiPoly<Rational>::variable(r, 1), x4 = MultiPoly<Rational>::variable(r, 4);
    CHECK((x0 * x0).partial_derivative("x0") == x0.scaled(Rational(2)));
    CHECK((x1 * x4).partial_derivative("x0").is_zero());
    CHECK_THROWS_AS(x0.partial_derivative("y7"), std::invalid_argument);
    auto rp = make_ring<FP>("x", 2, PrimeContext(3));
    auto z = MultiPoly<FP>::variable(rp, 0);
    CHECK_THROWS_AS(z.pow(3).partial_derivative(0), std::domain_error);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(99);
    auto r = make_ring<FP>("x", 5, PrimeContext(31));
    std::uniform_int_distribution<int> d(0, 30);
    for (int i = 0; i < 1000; ++i) {
        auto f = random_poly(r, rng, 2, 6), g = random_poly(r, rng, 2, 6);
        std::vector<FP> p;
        for (int k = 0; k < 5; ++k) p.emplace_back(r->ctx, d(rng));
        REQUIRE((f * g)(p) == f(p) * g(p));
        REQUIRE((f + g)(p) == f(p) + g(p));
    }
}

TEST_CASE("homogeneous degrees add under products") {
    std::mt19937_64 rng(5);
    auto r = make_ring<Rational>("x", 4);
    for (int t = 0; t < 50; ++t) {
        MultiPoly<Rational> f(r), g(r);
        for (const auto& m : monomials_of_degree(4, 2))
            if (rng() % 3 == 0) f.add_term(m, Rational(static_cast<long>(rng() % 7) + 1));
        for (const auto& m : monomials_of_degree(4, 3))
            if (rng() % 3 == 0) g.add_term(m, Rational(static_cast<long>(rng() % 7) + 1));
        if (f.is_zero() || g.is_zero()) continue;
        CHECK((f * g).is_homogeneous());
        CHECK((f * g).degree() == f.degree() + g.degree());
    }
}

TEST_CASE("exact division and substitution") {
    auto r = make_ring<Rational>("x", 2);
    auto x = MultiPoly<Rational>::variable(r, 0), y = MultiPoly<Rational>::variable(r, 1);
    auto f = (x + y) * (x - y.scaled(Rational(2)));
    CHECK(*f.divide_exact(x + y) == x - y.scaled(Rational(2)));
    CHECK_FALSE(f.divide_exact(x + y + MultiPoly<Rational>::constant(r, 1)).has_value());
    CHECK(f.substitute({y, x}) == (y + x) * (y - x.scaled(Rational(2))));
}

TEST_CASE("determinants") {
    auto r = make_ring<Rational>("x", 5);
    PolyMatrix<Rational> id(r, 5, 5), diag(r, 5, 5);
    MultiPoly<Rational> prod = MultiPoly<Rational>::constant(r, 1);
    for (std::size_t i = 0; i < 5; ++i) {
        id(i, i) = MultiPoly<Rational>::constant(r, 1);
        diag(i, i) = MultiPoly<Rational>::variable(r, i);
        prod = prod * diag(i, i);
    }
    CHECK(determinant(id) == MultiPoly<Rational>::constant(r, 1));
    CHECK(determinant(diag) == prod);
    CHECK(determinant_bareiss(diag) == prod);
    CHECK_THROWS_AS(determinant(PolyMatrix<Rational>(r, 2, 3)), std::invalid_argument);

    SUBCASE("cofactor and Bareiss agree with pointwise Leibniz on random linear matrices") {
        std::mt19937_64 rng(17);
        auto rp = make_ring<FP>("x", 5, PrimeContext(31));
        for (int t = 0; t < 10; ++t) {
            PolyMatrix<FP> m(rp, 5, 5);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j)
                    for (std::size_t k = 0; k < 5; ++k)
                        m(i, j).add_term(Monomial::variable(k), FP(rp->ctx, static_cast<long long>(rng() % 31)));
            const auto d1 = determinant_cofactor(m);
            const auto d2 = determinant_bareiss(m);
            CHECK(d1 == d2);
            CHECK((d1.is_zero() || (d1.is_homogeneous() && d1.degree() == 5)));
            for (int s = 0; s < 20; ++s) {
                std::vector<FP> p;
                for (int k = 0; k < 5; ++k) p.emplace_back(rp->ctx, static_cast<long long>(rng() % 31));
                REQUIRE(d1(p) == leibniz(m.evaluate(p)));
            }
        }
    }

    SUBCASE("Bareiss over rational functions") {
        using RF = RationalFunction<Rational>;
        auto rr = make_ring<RF>("x", 2);
        const RF a = RF::parameter({});
        PolyMatrix<RF> m(rr, 2, 2);
        m(0, 0) = MultiPoly<RF>::variable(rr, 0).scaled(a);
        m(0, 1) = MultiPoly<RF>::variable(rr, 1);
        m(1, 0) = MultiPoly<RF>::variable(rr, 1).scaled(a.inverse());
        m(1, 1) = MultiPoly<RF>::variable(rr, 0);
        const auto d = determinant(m);
        const auto x0 = MultiPoly<RF>::variable(rr, 0), x1 = MultiPoly<RF>::variable(rr, 1);
        CHECK(d == (x0 * x0).scaled(a) - (x1 * x1).scaled(a.inverse()));
    }
}

TEST_CASE("rank at a point") {
    auto r = make_ring<FP>("x", 3, PrimeContext(31));
    PolyMatrix<FP> zero(r, 3, 3), id(r, 3, 3), m(r, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = MultiPoly<FP>::constant(r, 1);
    const std::vector<FP> p{FP(r->ctx, 1), FP(r->ctx, 2), FP(r->ctx, 3)};
    CHECK(rank_at_point<FP>(zero, p) == 0);
    CHECK(rank_at_point<FP>(id, p) == 3);
    const std::vector<FP> origin(3, FP(r->ctx, 0));
    CHECK_THROWS_AS(rank_at_point<FP>(id, origin), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) m(i, j).add_term(Monomial::variable(k), FP(r->ctx, static_cast<long long>(rng() % 31)));
    // a rank-deficient variant: third row = first + second
    for (std::size_t j = 0; j < 3; ++j) m(2, j) = m(0, j) + m(1, j);
    for (int t = 0; t < 50; ++t) {
        std::vector<FP> q;
        for (int k = 0; k < 3; ++k) q.emplace_back(r->ctx, static_cast<long long>(rng() % 30 + 1));
        const auto base = rank_at_point<FP>(m, q);
        CHECK(base <= 2);
        std::vector<FP> scaled;
        for (const auto& x : q) scaled.push_back(x * FP(r->ctx, 7));
        CHECK(rank_at_point<FP>(m, scaled) == base);
        PolyMatrix<FP> permuted(r, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) permuted(i, j) = m((i + 1) % 3, 2 - j);
        CHECK(rank_at_point<FP>(permuted, q) == base);
    }
}

TEST_CASE("linear span membership") {
    auto r = make_ring<Rational>("x", 3);
    auto x0 = MultiPoly<Rational>::variable(r, 0), x1 = MultiPoly<Rational>::variable(r, 1), x2 = MultiPoly<Rational>::variable(r, 2);
    std::vector<MultiPoly<Rational>> basis{x0 * x0 + x1 * x2, x1 * x1 - x0 * x2, x2 * x2};
    auto c = in_linear_span(basis[0], basis);
    REQUIRE(c);
    CHECK(*c == std::vector<Rational>{1, 0, 0});
    auto z = in_linear_span(MultiPoly<Rational>(r), basis);
    REQUIRE(z);
    CHECK(*z == std::vector<Rational>{0, 0, 0});
    auto mix = in_linear_span(basis[1].scaled(Rational(3)) - basis[2], basis);
    REQUIRE(mix);
    CHECK(*mix == std::vector<Rational>{0, 3, -1});
    CHECK_FALSE(in_linear_span(x0 * x1, basis).has_value());
    CHECK_THROWS_AS(in_linear_span(x0, basis), std::invalid_argument);
}

TEST_CASE("dense linear algebra") {
    Matrix<Rational> m(3, 4);
    const long v[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = Rational(v[i][j]);
    CHECK(m.rank() == 2);
    const auto ker = m.kernel();
    CHECK(ker.size() == 2);
    for (const auto& k : ker) {
        const auto img = m.apply(k);
        for (const auto& x : img) CHECK(x.is_zero());
    }
    const std::vector<Rational> b{Rational(1), Rational(2), Rational(0)};
    CHECK(m.solve(b).has_value());
    const std::vector<Rational> bad{Rational(1), Rational(3), Rational(0)};
    CHECK_FALSE(m.solve(bad).has_value());
}
