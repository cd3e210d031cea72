#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "quintics/probe/raw_field.hpp"

namespace quintics {

/// Primes p = 1 mod 15 up to 241: the ones where e15 embeds and a scan is supported.
const std::vector<std::uint32_t>& supported_primes();

/// The first `count` values a = 2, 3, ... that avoid the excluded moduli modulo p.
std::vector<std::uint32_t> admissible_moduli(std::uint32_t p, std::size_t count = 2);
bool is_admissible(std::uint32_t p, std::uint32_t a);

/// Coefficients of the quadrics, M(y) and M'(x) modulo p in closed form.
class MooreRaw {
public:
    MooreRaw(std::uint32_t p, std::uint32_t a);

    const RawField& field() const { return f_; }
    std::uint32_t a() const { return a_; }
    /// z_k with z_0 = 2, z_{+-1} = a, z_{+-2} = -1/a.
    std::uint32_t z(long k) const;
    std::uint32_t quadric(std::size_t i, const RawPoint& x) const;
    RawPoint quadrics(const RawPoint& x) const;
    bool on_curve(const RawPoint& x) const;
    /// (d Q_j / d x_i)_{i,j}.
    RawMatrix jacobian(const RawPoint& x) const;
    RawMatrix moore(const RawPoint& y) const;
    RawMatrix dual(const RawPoint& x) const;

private:
    RawField f_;
    std::uint32_t a_, ainv_;
};

struct CurveScan {
    std::uint32_t p = 0;
    std::uint32_t a = 0;
    /// Sorted, normalized so the first nonzero coordinate is 1.
    std::vector<RawPoint> points;
    double seconds = 0.0;

    bool contains(const RawPoint& x) const;  ///< x need not be normalized
    bool in_hasse_interval() const;
};

/// A smooth point where the quadrics' Jacobian has rank other than 3.
struct SingularCurveError : std::runtime_error {
    SingularCurveError(const std::string& what, RawPoint at) : std::runtime_error(what), point(at) {}
    RawPoint point;
};

/// Exhaustive scan of P^4(F_p) for the common zeros of Q_0, ..., Q_4. Throws
/// std::invalid_argument for unsupported p or an excluded a, and SingularCurveError if
/// the Jacobian rank drops at some point.
CurveScan scan_curve(std::uint32_t p, std::uint32_t a);

/// Cache handling for curve scans.
struct CacheReport {
    enum class Outcome { kDisabled, kHit, kWritten, kRescanned };
    Outcome outcome = Outcome::kDisabled;
    std::string path;
    std::string reason;
};
std::string to_string(CacheReport::Outcome o);

/// Environment variable that overrides the cache directory.
inline constexpr const char* kCacheDirEnv = "QUINTICS_CACHE_DIR";

std::string sha256_hex(const std::string& data);
std::string cache_file_name(std::uint32_t p, std::uint32_t a);
/// Serializes a scan: header lines (magic, p, a, version, sha256 of the body) then one
/// point per line as comma-separated residues.
std::string serialize_scan(const CurveScan& scan);
/// Parses and validates a cache file; nullopt with `reason` set on any mismatch.
std::optional<CurveScan> parse_scan(const std::string& text, std::uint32_t p, std::uint32_t a, std::string* reason);

/// Loads the scan from `cache_dir` when its header and hash validate, otherwise scans and
/// writes the cache atomically (temp file then rename). An empty dir disables caching.
CurveScan load_or_scan(std::uint32_t p, std::uint32_t a, const std::filesystem::path& cache_dir, CacheReport* report = nullptr);

}  // namespace quintics
