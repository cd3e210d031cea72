#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quintics/report/report.hpp"

namespace quintics {

/// Suite names in the order they run and appear in reports.
const std::vector<std::string>& all_suites();

/// Expands "all" and comma-separated lists, drops duplicates and puts the result in run
/// order. Throws std::invalid_argument for an unknown name.
std::vector<std::string> expand_suites(const std::vector<std::string>& requested);

struct RunConfig {
    std::vector<std::string> suites;
    std::vector<std::uint32_t> primes{31, 61};
    /// Moduli per prime; a prime without an entry picks the first two admissible values.
    std::map<std::uint32_t, std::vector<std::uint32_t>> a_values;
    std::uint64_t seed = 42;
    /// Moore checks with a as an indeterminate; otherwise at a = 2 in Q(e15).
    bool symbolic_a = true;
    std::filesystem::path cache_dir;
    std::filesystem::path lattice_dir;  ///< empty uses the tables compiled into the library
    std::uint32_t witness_bound = 2000;  ///< search bound for the torsion witness curve
    unsigned jobs = 1;                    ///< independent suites run concurrently when > 1
};

nlohmann::json config_echo(const RunConfig& c);

/// Parses "--a" values: "auto", a bare modulus applied to every prime, or "p=a1,a2".
std::map<std::uint32_t, std::vector<std::uint32_t>> parse_a_values(const std::vector<std::string>& specs,
                                                                   const std::vector<std::uint32_t>& primes);

/// Checks primes and moduli before anything runs; throws std::invalid_argument.
void validate(const RunConfig& c);

using ProgressFn = std::function<void(const std::string& suite, const SuiteRun& done)>;

/// Runs the selected suites. Failures inside a suite become failed claims; the run continues.
VerificationReport run(const RunConfig& config, const ProgressFn& progress = {});

}  // namespace quintics
