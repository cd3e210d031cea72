#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "quintics/moore/moore.hpp"
#include "quintics/probe/certify.hpp"
#include "quintics/probe/suite.hpp"

using namespace quintics;
namespace fs = std::filesystem;

namespace {

using Fp = PrimeFieldNum;

std::vector<Fp> lift(const PrimeContext& ctx, const RawPoint& x) {
    std::vector<Fp> v;
    for (auto c : x) v.emplace_back(ctx, static_cast<long long>(c));
    return v;
}

RawPoint random_raw(std::uint32_t p, std::mt19937_64& rng) {
    RawPoint x{};
    do {
        for (auto& c : x) c = static_cast<std::uint32_t>(rng() % p);
    } while (is_zero(x));
    return x;
}

// Brute-force naive scan over all nonzero vectors of F_p^5, normalized afterwards.
std::vector<RawPoint> naive_scan(std::uint32_t p, std::uint32_t a) {
    const MooreRaw mr(p, a);
    std::vector<RawPoint> out;
    RawPoint x{};
    const std::uint64_t total = static_cast<std::uint64_t>(p) * p * p * p * p;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (auto& c : x) {
            c = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        // only keep representatives whose first nonzero coordinate is 1
        const auto lead = *std::find_if(x.begin(), x.end(), [](std::uint32_t c) { return c != 0; });
        if (lead == 1 && mr.on_curve(x)) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("quintics-test-" + std::to_string(std::random_device{}()))) { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("closed-form raw matrices agree with the polynomial Moore system") {
    for (std::uint32_t p : {31u, 61u}) {
        const std::uint32_t a = admissible_moduli(p)[0];
        const PrimeContext ctx(p);
        const MooreSystem<Fp> ms(Fp(ctx, a), false);
        const MooreRaw mr(p, a);
        std::mt19937_64 rng(p);
        for (int t = 0; t < 50; ++t) {
            const RawPoint x = random_raw(p, rng);
            const auto xs = lift(ctx, x);
            const auto m = ms.moore_at(xs), d = ms.dual_at(xs);
            const RawMatrix rm = mr.moore(x), rd = mr.dual(x);
            for (std::size_t i = 0; i < 5; ++i) {
                CHECK(mr.quadric(i, x) == ms.quadrics()[i].evaluate(xs).residue());
                for (std::size_t j = 0; j < 5; ++j) {
                    CHECK(rm[i][j] == m(i, j).residue());
                    CHECK(rd[i][j] == d(i, j).residue());
                }
            }
        }
    }
}

TEST_CASE("raw field linear algebra") {
    const RawField f(31);
    for (std::uint32_t v = 1; v < 31; ++v) CHECK(f.mul(v, f.inv(v)) == 1);
    CHECK_THROWS(RawField(32));

    SUBCASE("kernel of a rank-3 matrix") {
        RawMatrix m{};
        m[0] = {1, 2, 3, 4, 5};
        m[1] = {0, 1, 1, 0, 2};
        m[2] = {1, 3, 4, 4, 7};  // row 0 + row 1
        m[3] = {2, 0, 1, 1, 1};
        m[4] = {3, 2, 4, 5, 6};  // row 0 + row 3
        CHECK(determinant(f, m) == 0);
        CHECK(rank(f, m) == 3);
        const auto ker = kernel(f, m);
        REQUIRE(ker.size() == 2);
        for (const auto& v : ker) CHECK(is_zero(apply(f, m, v)));
    }
    SUBCASE("dense kernel against substitution") {
        std::mt19937_64 rng(5);
        const std::size_t rows = 12, cols = 9;
        // rows are combinations of 6 random vectors: kernel dimension exactly 3
        std::vector<std::vector<std::uint32_t>> basis(6, std::vector<std::uint32_t>(cols));
        for (auto& b : basis)
            for (auto& c : b) c = static_cast<std::uint32_t>(rng() % 31);
        std::vector<std::uint32_t> mat(rows * cols, 0);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t k = 0; k < 6; ++k) {
                const auto w = static_cast<std::uint32_t>(r < 6 ? (r == k) : rng() % 31);
                for (std::size_t c = 0; c < cols; ++c) mat[r * cols + c] = f.add(mat[r * cols + c], f.mul(w, basis[k][c]));
            }
        const auto ker = dense_kernel(f, mat, rows, cols);
        CHECK(ker.size() == 3);
        for (const auto& v : ker)
            for (std::size_t r = 0; r < rows; ++r) {
                std::uint32_t s = 0;
                for (std::size_t c = 0; c < cols; ++c) s = f.add(s, f.mul(mat[r * cols + c], v[c]));
                CHECK(s == 0);
            }
    }
}

TEST_CASE("admissible moduli avoid the excluded residues") {
    CHECK(admissible_moduli(31) == std::vector<std::uint32_t>{2, 4});
    CHECK(admissible_moduli(61) == std::vector<std::uint32_t>{2, 3});
    CHECK_FALSE(is_admissible(31, 3));
    CHECK_THROWS_AS(scan_curve(31, 3), std::invalid_argument);
    CHECK_THROWS_AS(scan_curve(37, 2), std::invalid_argument);
}

TEST_CASE("scan at p = 31 matches a naive enumeration and is deterministic") {
    const CurveScan s = scan_curve(31, 2);
    CHECK(s.points == naive_scan(31, 2));
    CHECK(s.points.size() == 25);
    CHECK(s.in_hasse_interval());
    CHECK(scan_curve(31, 2).points == s.points);
    const MooreRaw mr(31, 2);
    for (const auto& x : s.points) {
        CHECK(mr.on_curve(x));
        CHECK(rank(mr.field(), mr.jacobian(x)) == 3);
    }
    CHECK(check_scan_landmarks(s).ok);
    CHECK(check_scan_h5(s).ok);
    // origin given unnormalized
    CHECK(s.contains(RawPoint{0, 4, 29, 2, 27}));
}

TEST_CASE("secant variety point count matches an exhaustive count") {
    const CurveScan s = scan_curve(31, 4);
    const auto check = check_secant_variety_count(s);
    CHECK(check.ok);
    CHECK(check.witness["det_zero_count"] == 25000);
    CHECK(secant_variety_count(31, 25) == 25 * (32 * 32 - 24));
}

TEST_CASE("secant, incidence and pencil checks at p = 61") {
    const CurveScan s = scan_curve(61, 3);
    auto rng = probe_rng(42, 1, 61, 3);
    CHECK(check_dual_rank_on_curve(s).ok);
    CHECK(check_secant_points(s, 300, rng).ok);
    const auto inc = check_incidence(s, 100, rng);
    CHECK(inc.kernels.ok);
    CHECK(inc.duality.ok);
    CHECK(check_cone_pencils(s).ok);
    const auto d = check_hypersurface_density(s, 5000, rng);
    CHECK(d.ok);
    CHECK_FALSE(d.witness["off_hypersurface_witness"].is_null());
}

TEST_CASE("cremona inverse") {
    const CurveScan s = scan_curve(31, 2);
    const CremonaWitness w = interpolate_cremona_inverse(s);
    CHECK(w.unknowns == 5 * 35 + 126);
    CHECK(w.equations == 5 * 210);
    CHECK(w.kernel_dimension == 1);
    REQUIRE_FALSE(w.g.is_zero());
    CHECK(w.identity_holds);
    for (const auto& c : w.cubics)
        for (const auto& [m, coeff] : c.terms()) CHECK(m.degree() == 3);

    // independent round trip through the polynomial objects
    const PrimeContext ctx(31);
    const MooreSystem<Fp> ms(Fp(ctx, 2), false);
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 50) {
        const auto x = lift(ctx, random_raw(31, rng));
        std::vector<Fp> y;
        for (const auto& q : ms.quadrics()) y.push_back(q.evaluate(x));
        const Fp gx = w.g.evaluate(x);
        if (gx.is_zero()) continue;
        ++checked;
        for (std::size_t j = 0; j < 5; ++j) CHECK(w.cubics[j].evaluate(y) == gx * x[j]);
    }
    auto rng2 = probe_rng(42, 4, 31, 2);
    CHECK(check_cremona_round_trip(s, w, 200, rng2).ok);
    const auto image = check_cremona_secant_image(s, 100, rng2);
    CHECK(image.ok);
    CHECK(image.witness["working_pinning"] == "j");
    CHECK(image.witness["pinning_3i_holds"] == false);
}

TEST_CASE("point cache") {
    TempDir tmp;
    CacheReport r1, r2, r3, r4;
    const CurveScan fresh = load_or_scan(31, 2, tmp.path, &r1);
    CHECK(r1.outcome == CacheReport::Outcome::kWritten);
    const fs::path file = tmp.path / cache_file_name(31, 2);
    REQUIRE(fs::exists(file));

    const CurveScan cached = load_or_scan(31, 2, tmp.path, &r2);
    CHECK(r2.outcome == CacheReport::Outcome::kHit);
    CHECK(cached.points == fresh.points);

    SUBCASE("corruption triggers a rescan") {
        std::stringstream ss;
        ss << std::ifstream(file).rdbuf();
        std::string text = ss.str();
        const auto pos = text.rfind('\n', text.size() - 2);
        text[pos + 1] = text[pos + 1] == '1' ? '2' : '1';
        std::ofstream(file, std::ios::trunc) << text;
        std::string reason;
        CHECK_FALSE(parse_scan(text, 31, 2, &reason).has_value());
        CHECK_FALSE(reason.empty());
        const CurveScan again = load_or_scan(31, 2, tmp.path, &r3);
        CHECK(r3.outcome == CacheReport::Outcome::kRescanned);
        CHECK(again.points == fresh.points);
        CHECK(load_or_scan(31, 2, tmp.path, &r4).points == fresh.points);
        CHECK(r4.outcome == CacheReport::Outcome::kHit);
    }
    SUBCASE("header mismatch is rejected") {
        std::string reason;
        CHECK_FALSE(parse_scan(serialize_scan(fresh), 31, 4, &reason).has_value());
        CHECK(parse_scan(serialize_scan(fresh), 31, 2, &reason).has_value());
    }
    SUBCASE("disabled cache") {
        load_or_scan(31, 2, {}, &r3);
        CHECK(r3.outcome == CacheReport::Outcome::kDisabled);
    }
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("probe runner aggregates over configurations") {
    ProbeOptions o;
    o.primes = {31};
    o.a_values[31] = {2, 3};  // 3 is excluded mod 31
    o.secant_samples = 50;
    o.density_samples = 1000;
    o.incidence_samples = 20;
    o.round_trip_samples = 20;
    o.secant_image_samples = 20;
    o.exhaustive_prime_limit = 0;
    ProbeRunner r(o);
    REQUIRE(r.configs().size() == 2);
    CHECK(r.configs()[0].scan != nullptr);
    CHECK(r.configs()[1].scan == nullptr);
    const Claims scan = r.verify_scan();
    for (const auto& c : scan) {
        CHECK(c.suite == "scan");
        CHECK(c.status == Status::kFail);
        CHECK(c.witness["p=31,a=2"].is_object());
        CHECK(c.witness["p=31,a=3"].contains("error"));
    }

    o.a_values[31] = {2, 4};
    ProbeRunner good(o);
    for (auto claims : {good.verify_scan(), good.verify_secants(), good.verify_incidence(), good.verify_cremona()}) {
        CHECK_FALSE(claims.empty());
        for (const auto& c : claims) CHECK_MESSAGE(c.passed(), c.id);
    }
    // the same seed reproduces the same witnesses
    ProbeRunner again(o);
    const auto w1 = good.verify_incidence(), w2 = again.verify_incidence();
    for (std::size_t i = 0; i < w1.size(); ++i) CHECK(w1[i].witness == w2[i].witness);
}
