#pragma once

#include <string>
#include <vector>

#include "quintics/report/claim.hpp"

namespace quintics {

inline constexpr const char* kReportSchema = "quintics-report/1";

struct SuiteRun {
    std::string name;
    std::size_t claims = 0;
    double seconds = 0.0;
};

struct VerificationReport {
    std::string toolkit_version;
    nlohmann::json config = nlohmann::json::object();  ///< echo of the run configuration
    std::vector<SuiteRun> suites;
    Claims claims;
    /// Where curve scans came from (cache hit, written, rescanned); differs between runs.
    nlohmann::json cache = nlohmann::json::array();

    bool hard_failure() const;
    bool soft_failure() const;
};

/// 0 when there is no hard failure; with `strict` a soft failure also gives 1.
int exit_code(const VerificationReport& r, bool strict = false);

nlohmann::json to_json(const ClaimRecord& c);
ClaimRecord claim_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VerificationReport& r);
/// Throws std::invalid_argument on a schema mismatch or a malformed record.
VerificationReport report_from_json(const nlohmann::json& j);

/// Drops every "timing" object and the cache log, leaving what must be identical between
/// two runs with the same configuration and seed.
nlohmann::json deterministic_part(const nlohmann::json& report);

std::string render_json(const VerificationReport& r);
std::string render_markdown(const VerificationReport& r);

}  // namespace quintics
