#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <vector>

#include "quintics/probe/scan.hpp"
#include "quintics/report/claim.hpp"

namespace quintics {

struct ProbeOptions {
    std::vector<std::uint32_t> primes{31, 61};
    /// Explicit moduli per prime; primes missing here use admissible_moduli(p, 2).
    std::map<std::uint32_t, std::vector<std::uint32_t>> a_values;
    std::uint64_t seed = 42;
    std::filesystem::path cache_dir;  ///< empty disables the point cache
    std::size_t secant_samples = 1000;
    std::size_t density_samples = 20000;
    std::size_t incidence_samples = 500;
    std::size_t round_trip_samples = 500;
    std::size_t secant_image_samples = 200;
    /// Full P^4 scans (rank-3 locus, exhaustive det M' count) only run at primes up to this.
    std::uint32_t exhaustive_prime_limit = 31;
};

/// One configured curve and how it was obtained.
struct ProbeConfig {
    std::uint32_t p = 0;
    std::uint32_t a = 0;
    std::shared_ptr<const CurveScan> scan;  ///< null when the scan failed
    std::string error;
    CacheReport cache;
    double seconds = 0.0;

    std::string key() const { return "p=" + std::to_string(p) + ",a=" + std::to_string(a); }
};

/// Runs the finite-field suites over every (p, a) configuration, scanning each curve once.
class ProbeRunner {
public:
    explicit ProbeRunner(ProbeOptions options);

    const ProbeOptions& options() const { return options_; }
    /// Scans (or loads from cache) on first use.
    const std::vector<ProbeConfig>& configs();

    Claims verify_scan();
    Claims verify_secants();
    Claims verify_incidence();
    Claims verify_cremona();

private:
    ProbeOptions options_;
    std::vector<ProbeConfig> configs_;
    bool scanned_ = false;
};

}  // namespace quintics
