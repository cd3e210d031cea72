#include <doctest.h>

#include <regex>

#include "quintics/report/run.hpp"

using namespace quintics;

namespace {

VerificationReport synthetic() {
    VerificationReport r;
    r.toolkit_version = "test";
    r.config = {{"seed", 7}};
    ClaimRecord a = hard_claim("demo.exact", "an exact statement", true, {{"value", 3}});
    a.suite = "demo";
    a.seconds = 0.25;
    ClaimRecord b = soft_claim("demo.stat", "a statistical statement", true, "hits within 5 sd of 100", {{"hits", 97}});
    b.suite = "demo";
    r.claims = {a, b};
    r.suites = {{"demo", 2, 0.5}};
    return r;
}

int count_token(const std::string& text, const std::string& token) {
    const std::regex re("\\b" + token + "\\b");
    return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("json round trip") {
    const VerificationReport r = synthetic();
    const auto j = to_json(r);
    CHECK(j["schema"] == kReportSchema);
    const VerificationReport back = report_from_json(nlohmann::json::parse(render_json(r)));
    CHECK(to_json(back) == j);
    CHECK(back.claims[1].status == Status::kSoftPass);
    CHECK(back.claims[1].envelope == "hits within 5 sd of 100");
    CHECK(back.claims[0].seconds == doctest::Approx(0.25));
    CHECK_THROWS_AS(report_from_json(nlohmann::json{{"schema", "other"}}), std::invalid_argument);
    auto broken = j;
    broken["claims"][0]["status"] = "maybe";
    CHECK_THROWS_AS(report_from_json(broken), std::invalid_argument);
}

TEST_CASE("markdown rendering") {
    VerificationReport r = synthetic();
    std::string md = render_markdown(r);
    CHECK(count_token(md, "FAIL") == 0);
    CHECK(md.find("SOFT PASS") != std::string::npos);
    CHECK(md.find("hits within 5 sd of 100") != std::string::npos);
    CHECK(md.find("### an exact statement") != std::string::npos);

    r.claims[0].status = Status::kFail;
    md = render_markdown(r);
    CHECK(count_token(md, "FAIL") == 1);
}

TEST_CASE("exit codes") {
    VerificationReport r = synthetic();
    CHECK(exit_code(r) == 0);
    r.claims[1].status = Status::kSoftFail;
    CHECK(exit_code(r) == 0);
    CHECK(exit_code(r, true) == 1);
    r.claims[0].status = Status::kFail;
    CHECK(exit_code(r) == 1);
    CHECK(exit_code(VerificationReport{}) == 0);
}

TEST_CASE("timing is excluded from the deterministic part") {
    VerificationReport a = synthetic(), b = synthetic();
    b.claims[0].seconds = 9.0;
    b.suites[0].seconds = 3.0;
    b.cache = nlohmann::json::array({{{"outcome", "hit"}}});
    a.cache = nlohmann::json::array({{{"outcome", "hit"}}});
    CHECK(to_json(a) != to_json(b));
    CHECK(deterministic_part(to_json(a)) == deterministic_part(to_json(b)));
    b.cache = nlohmann::json::array({{{"outcome", "written"}}});
    CHECK(deterministic_part(to_json(a)) == deterministic_part(to_json(b)));
    b.claims[0].witness["value"] = 4;
    CHECK(deterministic_part(to_json(a)) != deterministic_part(to_json(b)));
}

TEST_CASE("suite selection and configuration parsing") {
    CHECK(expand_suites({"all"}) == all_suites());
    CHECK(expand_suites({"lattice,hesse", "hesse"}) == std::vector<std::string>{"hesse", "lattice"});
    CHECK(expand_suites({}).empty());
    CHECK_THROWS_AS(expand_suites({"nonsense"}), std::invalid_argument);

    const auto a = parse_a_values({"auto", "2", "61=3,4"}, {31, 61});
    CHECK(a.at(31) == std::vector<std::uint32_t>{2});
    CHECK(a.at(61) == std::vector<std::uint32_t>{2, 3, 4});
    CHECK(parse_a_values({"auto"}, {31}).empty());
    CHECK_THROWS_AS(parse_a_values({"x"}, {31}), std::invalid_argument);

    RunConfig c;
    c.primes = {37};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.primes = {31};
    c.a_values[31] = {3};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.a_values[31] = {2};
    CHECK_NOTHROW(validate(c));
}

TEST_CASE("running suites") {
    RunConfig c;
    SUBCASE("empty suite list") {
        const VerificationReport r = run(c);
        CHECK(r.claims.empty());
        CHECK(exit_code(r) == 0);
    }
    SUBCASE("lattice only") {
        c.suites = {"lattice"};
        const VerificationReport r = run(c);
        REQUIRE(r.suites.size() == 1);
        CHECK(r.suites[0].claims == r.claims.size());
        CHECK(r.claims.size() >= 10);
        for (const auto& cl : r.claims) CHECK(cl.status == Status::kPass);
        CHECK(r.config["seed"] == 42);
        CHECK(r.cache.empty());
    }
    SUBCASE("broken lattice tables fail the suite but the run continues") {
        c.suites = {"lattice", "sections"};
        c.lattice_dir = "/nonexistent";
        const VerificationReport r = run(c);
        CHECK(r.hard_failure());
        CHECK(r.claims.front().id == "sections.listed-form");
        CHECK(r.claims.back().id == "lattice.error");
    }
    SUBCASE("repeated runs agree, also with concurrent suites") {
        c.suites = {"heisenberg", "sections", "moore", "lattice"};
        c.symbolic_a = false;
        const auto first = deterministic_part(to_json(run(c)));
        c.jobs = 4;
        CHECK(deterministic_part(to_json(run(c))) == first);
    }
}
