#include <doctest.h>

#include <random>

#include "quintics/lattice/suite.hpp"

using namespace quintics;

namespace {

const LatticeTables& tables() {
    static const LatticeTables t = load_lattice_tables();
    return t;
}

DivisorClass random_class(const IntersectionForm& f, std::mt19937_64& rng) {
    DivisorClass d = f.zero();
    for (auto& c : d.coeffs) c = static_cast<long long>(rng() % 21) - 10;
    return d;
}

// Independent expansion of (h H1 + c C + f F)^3 using only the stated products.
long long cube_by_hand(long long h, long long c, long long f) {
    return 5 * h * h * h + 3 * 4 * h * h * c + 3 * 3 * h * h * f + 6 * h * c * f + 3 * h * c * c;
}

}  // namespace

TEST_CASE("repository tables match the embedded copies") {
    const LatticeTables from_dir = load_lattice_tables(QUINTICS_SOURCE_DIR "/data/lattice");
    CHECK(from_dir.secant_bundle == tables().secant_bundle);
    CHECK(from_dir.resolved_secant == tables().resolved_secant);
    CHECK(from_dir.symmetric_square == tables().symmetric_square);
    CHECK(from_dir.abelian_blowup == tables().abelian_blowup);
    CHECK(from_dir.source != "embedded");
}

TEST_CASE("triple products") {
    const auto& b = tables().secant_bundle;
    const auto h = b.generator("H1");
    CHECK(b.cube(h) == 5);
    CHECK(b.triple(h, h, b.generator("C")) == 4);
    CHECK(b.triple(b.generator("F"), h, h) == 3);
    CHECK(b.triple(b.generator("C"), h, b.generator("F")) == 1);
    CHECK(b.triple(b.named("X"), h, h) == 5 - 2 * 4 + 6 * 3);
    CHECK(b.triple(b.named("AK"), h, h) == 3 * 5 - 3 * 4 + 4 * 3);
    CHECK(b.cube(b.zero()) == 0);
    CHECK(b.triple(b.named("X"), b.zero(), h) == 0);
    CHECK(b.cube(b.named("X")) == cube_by_hand(1, -2, 6));
    CHECK(b.cube(b.named("K")) == cube_by_hand(-2, 1, 2));
}

TEST_CASE("multilinearity and symmetry on random classes") {
    std::mt19937_64 rng(3);
    const auto& b = tables().secant_bundle;
    for (int t = 0; t < 200; ++t) {
        const auto u = random_class(b, rng), v = random_class(b, rng), w = random_class(b, rng), z = random_class(b, rng);
        CHECK(b.triple(u + z, v, w) == b.triple(u, v, w) + b.triple(z, v, w));
        CHECK(b.triple(u, v + z, w) == b.triple(u, v, w) + b.triple(u, z, w));
        CHECK(b.triple(u, v, w + z) == b.triple(u, v, w) + b.triple(u, v, z));
        CHECK(b.triple(u, v, w) == b.triple(w, u, v));
        CHECK(b.triple(u, v, w) == b.triple(v, u, w));
        CHECK(b.cube(u) == cube_by_hand(u.coeffs[0], u.coeffs[1], u.coeffs[2]));
    }
    const auto& s = tables().symmetric_square;
    for (int t = 0; t < 100; ++t) {
        const auto u = random_class(s, rng), v = random_class(s, rng), w = random_class(s, rng);
        CHECK(s.pair(u, v) == s.pair(v, u));
        CHECK(s.pair(u + w, v) == s.pair(u, v) + s.pair(w, v));
        CHECK(s.pair(u, v) == u.coeffs[0] * v.coeffs[0] + u.coeffs[0] * v.coeffs[1] + u.coeffs[1] * v.coeffs[0]);
    }
}

TEST_CASE("unknown entries and mismatched classes are refused") {
    const auto& v = tables().resolved_secant;
    const auto sigma = v.generator("Sigma1"), h2 = v.generator("H2");
    CHECK(v.triple(sigma, sigma, h2) == 0);
    CHECK_THROWS_AS(v.triple(sigma, h2, h2), LatticeError);
    CHECK_THROWS_AS(v.triple(tables().secant_bundle.generator("H1"), h2, h2), LatticeError);
    CHECK_THROWS_AS(v.product({h2, h2}), LatticeError);
    CHECK_THROWS_AS(v.generator("C"), LatticeError);
}

TEST_CASE("table parsing") {
    const auto f = IntersectionForm::parse("surface demo\nbasis A B\nA A = 2  # note\nB A = -1\nclass D = 2A - B\n");
    CHECK(f.arity() == 2);
    CHECK(f.entry({1, 0}) == -1);
    CHECK_FALSE(f.entry({1, 1}).has_value());
    CHECK(f.named("D").coeffs == std::vector<long long>{2, -1});
    CHECK(f.combination("D + B").coeffs == std::vector<long long>{2, 0});
    CHECK(f.is_symmetric());

    CHECK_THROWS_AS(IntersectionForm::parse("surface d\nbasis A B\nA B = 1\nB A = 2\n"), LatticeError);
    CHECK_THROWS_AS(IntersectionForm::parse("surface d\nbasis A B\nA B C = 1\n"), LatticeError);
    CHECK_THROWS_AS(IntersectionForm::parse("surface d\nbasis A\nA Z = 1\n"), LatticeError);
    CHECK_THROWS_AS(IntersectionForm::parse("surface d\nbasis A\nA A = x\n"), LatticeError);
    CHECK_THROWS_AS(IntersectionForm::parse("basis A\n"), LatticeError);
    CHECK_THROWS_AS(IntersectionForm::parse("triple d\nbasis A\nclass Q = 2A B\n"), LatticeError);
    CHECK_THROWS_AS(TripleForm(IntersectionForm::parse("surface d\nbasis A\n")), LatticeError);
}

TEST_CASE("integer roots of the double point equation") {
    CHECK(positive_integer_roots(10, 75) == std::vector<long long>{15});
    CHECK(positive_integer_roots(0, 4) == std::vector<long long>{2});
    CHECK(positive_integer_roots(0, 3).empty());
    CHECK(positive_integer_roots(-10, 0).empty());
    CHECK(positive_integer_roots(5, -6) == std::vector<long long>{3, 2});
}

TEST_CASE("lattice suite passes and reports its numbers") {
    const Claims claims = verify_lattice(tables());
    CHECK(claims.size() == 14);
    for (const auto& c : claims) {
        CHECK_MESSAGE(c.status == Status::kPass, c.id);
        CHECK(c.suite == "lattice");
    }
    auto find = [&](const std::string& id) {
        for (const auto& c : claims)
            if (c.id == id) return c;
        FAIL("missing " << id);
        return ClaimRecord{};
    };
    CHECK(find("lattice.alpha-vanishes").witness["expansion_terms"] == nlohmann::json({40, 0, -60, 25}));
    CHECK(find("lattice.double-point-degree").witness["positive_roots"] == nlohmann::json({15}));
    CHECK(find("lattice.exceptional-cube").witness["computed"] == -25);
}

TEST_CASE("a wrong table entry is caught with both values reported") {
    std::string text = embedded_lattice_table("secant_bundle.txt");
    text.replace(text.find("H1 H1 F  = 3"), 12, "H1 H1 F  = 2");
    LatticeTables t = tables();
    t.secant_bundle = TripleForm(IntersectionForm::parse(text));
    const Claims claims = verify_degree15_surfaces(t);
    bool caught = false;
    for (const auto& c : claims)
        if (c.id == "lattice.exceptional-degree") {
            caught = c.status == Status::kFail && c.witness["computed"] == 9 && c.witness["expected"] == 15;
        }
    CHECK(caught);
}
