#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace quintics {

enum class Status { kPass, kFail, kSoftPass, kSoftFail };

std::string to_string(Status s);
Status status_from_string(const std::string& s);
inline bool is_soft(Status s) { return s == Status::kSoftPass || s == Status::kSoftFail; }
inline bool is_failure(Status s) { return s == Status::kFail || s == Status::kSoftFail; }

/// Outcome of one certified statement.
struct ClaimRecord {
    std::string id;       ///< stable identifier, e.g. "moore.symmetric"
    std::string suite;    ///< suite that produced it
    std::string anchor;   ///< short human description of the statement
    Status status = Status::kFail;
    nlohmann::json witness = nlohmann::json::object();
    std::string envelope;  ///< statistical envelope for soft checks
    double seconds = 0.0;

    bool passed() const { return status == Status::kPass || status == Status::kSoftPass; }
};

using Claims = std::vector<ClaimRecord>;

inline ClaimRecord hard_claim(std::string id, std::string anchor, bool ok, nlohmann::json witness = nlohmann::json::object()) {
    ClaimRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.status = ok ? Status::kPass : Status::kFail;
    r.witness = std::move(witness);
    return r;
}

inline ClaimRecord soft_claim(std::string id, std::string anchor, bool ok, std::string envelope,
                              nlohmann::json witness = nlohmann::json::object()) {
    ClaimRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.status = ok ? Status::kSoftPass : Status::kSoftFail;
    r.envelope = std::move(envelope);
    r.witness = std::move(witness);
    return r;
}

inline bool all_passed(const Claims& cs) {
    for (const auto& c : cs) {
        if (!c.passed()) return false;
    }
    return true;
}

}  // namespace quintics
