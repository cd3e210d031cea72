#include <random>
#include <set>

#include "doctest.h"
#include "quintics/scalars/cyclo.hpp"
#include "quintics/scalars/prime_field.hpp"
#include "quintics/scalars/rational_function.hpp"
#include "quintics/scalars/roots.hpp"

using namespace quintics;

namespace {

CycloNum random_cyclo(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::array<Rational, 8> c{};
    for (auto& x : c) x = Rational(d(rng));
    return CycloNum(c);
}

RationalFunction<Rational> random_rf(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 4), deg(0, 2);
    auto poly = [&] {
        std::vector<Rational> v(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : v) x = Rational(d(rng));
        return UPoly<Rational>({}, v);
    };
    UPoly<Rational> den = poly();
    while (den.is_zero()) den = poly();
    return {poly(), den};
}

template <class K, class Gen>
void check_field_axioms(Gen gen, int trials = 1000) {
    for (int i = 0; i < trials; ++i) {
        const K x = gen(), y = gen(), z = gen();
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x + y == y + x);
        REQUIRE(x * y == y * x);
        REQUIRE(x - x == K::zero(x.context()));
        if (!x.is_zero()) REQUIRE(x * x.inverse() == K::one(x.context()));
    }
}

std::uint64_t brute_order(std::uint32_t p, std::uint32_t r) {
    std::uint64_t acc = r, k = 1;
    while (acc != 1) {
        acc = acc * r % p;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("cyclotomic roots of unity have the expected orders") {
    CHECK(cyclo_root_of_unity(3, 0) == CycloNum(1));
    const CycloNum e3 = cyclo_root_of_unity(3, 1);
    CHECK(e3 != CycloNum(1));
    CHECK(pow(e3, 3) == CycloNum(1));
    for (int n : {1, 3, 5, 15}) {
        for (int k = 0; k < n; ++k) {
            const CycloNum z = cyclo_root_of_unity(n, k);
            CHECK(z.root_of_unity_order() == n / std::gcd(n, k));
            // independent oracle: smallest m with z^m = 1
            int m = 1;
            while (pow(z, m) != CycloNum(1)) ++m;
            CHECK(m == n / std::gcd(n, k));
        }
    }
    CHECK_THROWS_AS(cyclo_root_of_unity(7, 1), ArithmeticError);
    CHECK_THROWS_AS(cyclo_root_of_unity(2, 1), ArithmeticError);
}

TEST_CASE("e15^5 is a primitive cube root: x^2 + x + 1 vanishes") {
    const CycloNum w = cyclo_root_of_unity(15, 5);
    CHECK(w == cyclo_root_of_unity(3, 1));
    CHECK((w * w + w + CycloNum(1)).is_zero());
    const CycloNum z = cyclo_root_of_unity(5, 1);
    CHECK((z * z * z * z + z * z * z + z * z + z + CycloNum(1)).is_zero());
}

TEST_CASE("cyclotomic rendering") {
    CHECK(CycloNum(1).to_string() == "1");
    CHECK(cyclo_root_of_unity(3, 2).to_string() == "e3^2");
    CHECK(cyclo_root_of_unity(5, 1).to_string() == "e5");
    CHECK(cyclo_root_of_unity(15, 7).to_string() == "e15^7");
}

TEST_CASE("embedding into F_31") {
    const PrimeFieldNum w = canonical_e15_witness(31);
    CHECK(w.multiplicative_order() == 15);
    CHECK(embed_cyclo_in_prime_field(CycloNum(1), 31, w).residue() == 1);
    const auto e3 = embed_cyclo_in_prime_field(cyclo_root_of_unity(3, 1), 31, w);
    std::set<std::uint32_t> order3;
    for (std::uint32_t r = 1; r < 31; ++r)
        if (brute_order(31, r) == 3) order3.insert(r);
    CHECK(order3 == std::set<std::uint32_t>{5, 25});
    CHECK(order3.count(e3.residue()) == 1);
    const auto e15 = embed_cyclo_in_prime_field(CycloNum::e15_power(1), 31, w);
    CHECK(pow(e15, 15).residue() == 1);
    CHECK(pow(e15, 5).residue() != 1);

    CHECK_THROWS_AS(embed_cyclo_in_prime_field(CycloNum(1), 37, PrimeFieldNum(PrimeContext(37), 2)), ArithmeticError);
    CHECK_THROWS_AS(embed_cyclo_in_prime_field(CycloNum(1), 31, PrimeFieldNum(PrimeContext(31), 5)), ArithmeticError);
}

TEST_CASE("embedding is a ring homomorphism") {
    std::mt19937_64 rng(7);
    const CycloEmbedding phi(61);
    const PrimeFieldNum w = canonical_e15_witness(61);
    for (int i = 0; i < 1000; ++i) {
        const CycloNum x = random_cyclo(rng), y = random_cyclo(rng);
        REQUIRE(phi(x * y) == phi(x) * phi(y));
        REQUIRE(phi(x + y) == phi(x) + phi(y));
        REQUIRE(phi(x) == embed_cyclo_in_prime_field(x, 61, w));
    }
}

TEST_CASE("field axioms") {
    std::mt19937_64 rng(1234);
    SUBCASE("Q(e15)") { check_field_axioms<CycloNum>([&] { return random_cyclo(rng); }); }
    SUBCASE("F_p") {
        const PrimeContext ctx(241);
        std::uniform_int_distribution<int> d(0, 240);
        check_field_axioms<PrimeFieldNum>([&] { return PrimeFieldNum(ctx, d(rng)); });
    }
    SUBCASE("Q(a)") { check_field_axioms<RationalFunction<Rational>>([&] { return random_rf(rng); }, 300); }
}

TEST_CASE("prime field basics") {
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(33));
    CHECK_THROWS_AS(PrimeContext(15), ArithmeticError);
    const PrimeContext c(31);
    CHECK_THROWS_AS(PrimeFieldNum(c, 0).inverse(), ArithmeticError);
    CHECK(PrimeFieldNum(c, -1).residue() == 30);
    CHECK_THROWS_AS(PrimeFieldNum(c, 1) + PrimeFieldNum(PrimeContext(61), 1), ArithmeticError);
}

TEST_CASE("rational functions stay reduced") {
    using RF = RationalFunction<Rational>;
    const RF a = RF::parameter({});
    const RF one = RF::one({});
    const RF x = (a * a - one) / (a - one);
    CHECK(x == a + one);
    CHECK(x.is_polynomial());
    CHECK((one / a).to_string() == "(1)/(a)");
    CHECK(x.evaluate(Rational(3)) == Rational(4));
    CHECK_THROWS_AS((one / a).evaluate(Rational(0)), ArithmeticError);
}
