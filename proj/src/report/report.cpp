#include "quintics/report/report.hpp"

#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace quintics {

bool VerificationReport::hard_failure() const {
    for (const auto& c : claims)
        if (c.status == Status::kFail) return true;
    return false;
}

bool VerificationReport::soft_failure() const {
    for (const auto& c : claims)
        if (c.status == Status::kSoftFail) return true;
    return false;
}

int exit_code(const VerificationReport& r, bool strict) {
    return r.hard_failure() || (strict && r.soft_failure()) ? 1 : 0;
}

nlohmann::json to_json(const ClaimRecord& c) {
    nlohmann::json j{{"id", c.id}, {"suite", c.suite}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"witness", c.witness}};
    if (!c.envelope.empty()) j["envelope"] = c.envelope;
    j["timing"] = {{"seconds", c.seconds}};
    return j;
}

ClaimRecord claim_from_json(const nlohmann::json& j) {
    try {
        ClaimRecord c;
        c.id = j.at("id").get<std::string>();
        c.suite = j.at("suite").get<std::string>();
        c.anchor = j.at("anchor").get<std::string>();
        c.status = status_from_string(j.at("status").get<std::string>());
        c.witness = j.value("witness", nlohmann::json::object());
        c.envelope = j.value("envelope", std::string());
        if (j.contains("timing")) c.seconds = j.at("timing").value("seconds", 0.0);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed claim record: ") + e.what());
    }
}

nlohmann::json to_json(const VerificationReport& r) {
    std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"soft-pass", 0}, {"soft-fail", 0}};
    for (const auto& c : r.claims) ++counts[to_string(c.status)];
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& s : r.suites) suites.push_back({{"name", s.name}, {"claims", s.claims}, {"timing", {{"seconds", s.seconds}}}});
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : r.claims) claims.push_back(to_json(c));
    return {{"schema", kReportSchema},
            {"toolkit_version", r.toolkit_version},
            {"config", r.config},
            {"summary",
             {{"claims", r.claims.size()},
              {"pass", counts["pass"]},
              {"fail", counts["fail"]},
              {"soft_pass", counts["soft-pass"]},
              {"soft_fail", counts["soft-fail"]},
              {"hard_failure", r.hard_failure()}}},
            {"suites", suites},
            {"claims", claims},
            {"cache", r.cache}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("schema", std::string()) != kReportSchema)
        throw std::invalid_argument(std::string("not a report with schema ") + kReportSchema);
    try {
        VerificationReport r;
        r.toolkit_version = j.at("toolkit_version").get<std::string>();
        r.config = j.value("config", nlohmann::json::object());
        for (const auto& s : j.value("suites", nlohmann::json::array()))
            r.suites.push_back({s.at("name").get<std::string>(), s.at("claims").get<std::size_t>(),
                                s.contains("timing") ? s.at("timing").value("seconds", 0.0) : 0.0});
        for (const auto& c : j.at("claims")) r.claims.push_back(claim_from_json(c));
        r.cache = j.value("cache", nlohmann::json::array());
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

namespace {

nlohmann::json strip_timing(const nlohmann::json& v) {
    if (v.is_object()) {
        nlohmann::json out = nlohmann::json::object();
        for (const auto& [k, x] : v.items())
            if (k != "timing") out[k] = strip_timing(x);
        return out;
    }
    if (v.is_array()) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& x : v) out.push_back(strip_timing(x));
        return out;
    }
    return v;
}

}  // namespace

nlohmann::json deterministic_part(const nlohmann::json& report) {
    nlohmann::json out = strip_timing(report);
    // a second run hits the cache the first one wrote
    if (out.is_object()) out.erase("cache");
    return out;
}

std::string render_json(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string status_label(Status s) {
    switch (s) {
        case Status::kPass: return "PASS";
        case Status::kFail: return "FAIL";
        case Status::kSoftPass: return "SOFT PASS";
        case Status::kSoftFail: return "SOFT FAIL";
    }
    return "FAIL";
}

std::string seconds(double s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << s << " s";
    return out.str();
}

}  // namespace

std::string render_markdown(const VerificationReport& r) {
    std::ostringstream out;
    const auto j = to_json(r);
    const auto& sum = j["summary"];
    out << "# Verification report\n\n";
    out << "- toolkit version: " << r.toolkit_version << "\n";
    if (r.config.contains("seed")) out << "- seed: " << r.config["seed"].dump() << "\n";
    if (r.config.contains("primes")) out << "- primes: " << r.config["primes"].dump() << "\n";
    out << "- claims: " << sum["claims"] << " (" << sum["pass"] << " pass, " << sum["soft_pass"] << " soft pass, " << sum["fail"]
        << " hard failures, " << sum["soft_fail"] << " soft failures)\n\n";

    if (!r.suites.empty()) {
        out << "| suite | claims | time |\n|---|---|---|\n";
        for (const auto& s : r.suites) out << "| " << s.name << " | " << s.claims << " | " << seconds(s.seconds) << " |\n";
        out << "\n";
    }
    std::string current;
    for (const auto& c : r.claims) {
        if (c.suite != current) {
            current = c.suite;
            out << "## " << current << "\n\n";
        }
        out << "### " << c.anchor << "\n\n";
        out << "- claim: `" << c.id << "`\n";
        out << "- status: **" << status_label(c.status) << "**\n";
        if (is_soft(c.status)) out << "- envelope: " << c.envelope << "\n";
        out << "- time: " << seconds(c.seconds) << "\n\n";
        out << "```json\n" << c.witness.dump(2) << "\n```\n\n";
    }
    return out.str();
}

}  // namespace quintics
