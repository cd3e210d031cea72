#include "quintics/report/claim.hpp"

#include <stdexcept>

namespace quintics {

std::string to_string(Status s) {
    switch (s) {
        case Status::kPass: return "pass";
        case Status::kFail: return "fail";
        case Status::kSoftPass: return "soft-pass";
        case Status::kSoftFail: return "soft-fail";
    }
    return "fail";
}

Status status_from_string(const std::string& s) {
    if (s == "pass") return Status::kPass;
    if (s == "fail") return Status::kFail;
    if (s == "soft-pass") return Status::kSoftPass;
    if (s == "soft-fail") return Status::kSoftFail;
    throw std::invalid_argument("unknown claim status '" + s + "'");
}

}  // namespace quintics
