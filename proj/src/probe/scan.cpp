#include "quintics/probe/scan.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "quintics/moore/suite.hpp"

namespace quintics {

const std::vector<std::uint32_t>& supported_primes() {
    static const std::vector<std::uint32_t> primes{31, 61, 151, 181, 211, 241};
    return primes;
}

bool is_admissible(std::uint32_t p, std::uint32_t a) {
    if (a % p == 0) return false;
    const auto ex = excluded_residues(p);
    return !std::binary_search(ex.begin(), ex.end(), a % p);
}

std::vector<std::uint32_t> admissible_moduli(std::uint32_t p, std::size_t count) {
    const auto ex = excluded_residues(p);
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 2; a < p && out.size() < count; ++a)
        if (!std::binary_search(ex.begin(), ex.end(), a)) out.push_back(a);
    return out;
}

MooreRaw::MooreRaw(std::uint32_t p, std::uint32_t a) : f_(p), a_(a % p), ainv_(0) {
    if (a_ == 0) throw std::invalid_argument("the modulus a must be nonzero");
    ainv_ = f_.inv(a_);
}

std::uint32_t MooreRaw::z(long k) const {
    const int r = mod5(k);
    if (r == 0) return f_.reduce(2);
    if (r == 1 || r == 4) return a_;
    return f_.neg(ainv_);
}

std::uint32_t MooreRaw::quadric(std::size_t i, const RawPoint& x) const {
    auto v = [&](std::size_t k) { return x[(i + k) % 5]; };
    return f_.sub(f_.add(f_.mul(v(0), v(0)), f_.mul(a_, f_.mul(v(2), v(3)))), f_.mul(ainv_, f_.mul(v(1), v(4))));
}

RawPoint MooreRaw::quadrics(const RawPoint& x) const {
    RawPoint out{};
    for (std::size_t i = 0; i < 5; ++i) out[i] = quadric(i, x);
    return out;
}

bool MooreRaw::on_curve(const RawPoint& x) const {
    for (std::size_t i = 0; i < 5; ++i)
        if (quadric(i, x) != 0) return false;
    return true;
}

RawMatrix MooreRaw::jacobian(const RawPoint& x) const {
    RawMatrix j{};
    const std::uint32_t ma = f_.neg(ainv_);
    for (std::size_t c = 0; c < 5; ++c) {
        auto at = [&](std::size_t k) { return (c + k) % 5; };
        j[at(0)][c] = f_.add(j[at(0)][c], f_.mul(2, x[at(0)]));
        j[at(2)][c] = f_.add(j[at(2)][c], f_.mul(a_, x[at(3)]));
        j[at(3)][c] = f_.add(j[at(3)][c], f_.mul(a_, x[at(2)]));
        j[at(1)][c] = f_.add(j[at(1)][c], f_.mul(ma, x[at(4)]));
        j[at(4)][c] = f_.add(j[at(4)][c], f_.mul(ma, x[at(1)]));
    }
    return j;
}

RawMatrix MooreRaw::moore(const RawPoint& y) const {
    RawMatrix m{};
    for (long i = 0; i < 5; ++i)
        for (long j = 0; j < 5; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f_.mul(y[static_cast<std::size_t>(mod5(i + j))], z(i - j));
    return m;
}

RawMatrix MooreRaw::dual(const RawPoint& x) const {
    RawMatrix m{};
    for (long i = 0; i < 5; ++i)
        for (long k = 0; k < 5; ++k)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = f_.mul(z(2 * i - k), x[static_cast<std::size_t>(mod5(k - i))]);
    return m;
}

bool CurveScan::contains(const RawPoint& x) const {
    if (is_zero(x)) return false;
    const RawField f(p);
    return std::binary_search(points.begin(), points.end(), normalize(f, x));
}

bool CurveScan::in_hasse_interval() const {
    const double n = static_cast<double>(points.size());
    return std::abs(n - p - 1.0) <= 2.0 * std::sqrt(static_cast<double>(p));
}

namespace {

// Points with first nonzero coordinate at `lead` and, when lead == 0, x1 == slab.
std::vector<RawPoint> scan_slab(const MooreRaw& mr, std::size_t lead, std::uint32_t slab) {
    const std::uint64_t p = mr.field().p();
    std::vector<RawPoint> found;
    RawPoint x{};
    x[lead] = 1;
    std::size_t first = lead + 1;
    if (lead == 0) {
        x[1] = slab;
        first = 2;
    }
    const std::size_t moving = 5 - first;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < moving; ++k) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t k = 4; k + 1 > first; --k) {
            x[k] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (mr.on_curve(x)) found.push_back(x);
    }
    return found;
}

}  // namespace

CurveScan scan_curve(std::uint32_t p, std::uint32_t a) {
    const auto& sp = supported_primes();
    if (std::find(sp.begin(), sp.end(), p) == sp.end()) throw std::invalid_argument("prime " + std::to_string(p) + " is not supported");
    if (!is_admissible(p, a)) throw std::invalid_argument("a = " + std::to_string(a) + " is an excluded modulus mod " + std::to_string(p));
    const auto start = std::chrono::steady_clock::now();
    const MooreRaw mr(p, a);

    // slabs: x0 = 1 split by x1, then the charts led by x1 .. x4
    std::vector<std::pair<std::size_t, std::uint32_t>> slabs;
    for (std::uint32_t s = 0; s < p; ++s) slabs.emplace_back(0, s);
    for (std::size_t lead = 1; lead < 5; ++lead) slabs.emplace_back(lead, 0);
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::vector<RawPoint>> parts(slabs.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < slabs.size(); ++i) parts[i] = scan_slab(mr, slabs[i].first, slabs[i].second);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < slabs.size(); i += workers) parts[i] = scan_slab(mr, slabs[i].first, slabs[i].second);
            }));
        }
        for (auto& j : jobs) j.get();
    }
    CurveScan scan{p, mr.a(), {}, 0.0};
    for (auto& part : parts) scan.points.insert(scan.points.end(), part.begin(), part.end());
    std::sort(scan.points.begin(), scan.points.end());

    for (const auto& x : scan.points) {
        if (rank(mr.field(), mr.jacobian(x)) != 3) throw SingularCurveError("Jacobian rank drops on the curve", x);
    }
    scan.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return scan;
}

std::string to_string(CacheReport::Outcome o) {
    switch (o) {
        case CacheReport::Outcome::kDisabled: return "disabled";
        case CacheReport::Outcome::kHit: return "hit";
        case CacheReport::Outcome::kWritten: return "written";
        case CacheReport::Outcome::kRescanned: return "rescanned";
    }
    return "unknown";
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("SHA-256 failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

std::string cache_file_name(std::uint32_t p, std::uint32_t a) { return "curve-p" + std::to_string(p) + "-a" + std::to_string(a) + ".pts"; }

namespace {

constexpr const char* kMagic = "# quintics point cache";

std::string body_of(const CurveScan& scan) {
    std::string body;
    for (const auto& x : scan.points) {
        for (std::size_t i = 0; i < 5; ++i) body += (i ? "," : "") + std::to_string(x[i]);
        body += "\n";
    }
    return body;
}

}  // namespace

std::string serialize_scan(const CurveScan& scan) {
    const std::string body = body_of(scan);
    std::string out = std::string(kMagic) + "\n";
    out += "p=" + std::to_string(scan.p) + "\n";
    out += "a=" + std::to_string(scan.a) + "\n";
    out += std::string("version=") + QUINTICS_VERSION + "\n";
    out += "sha256=" + sha256_hex(body) + "\n";
    return out + body;
}

std::optional<CurveScan> parse_scan(const std::string& text, std::uint32_t p, std::uint32_t a, std::string* reason) {
    auto fail = [&](const std::string& why) -> std::optional<CurveScan> {
        if (reason) *reason = why;
        return std::nullopt;
    };
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    for (int i = 0; i < 5; ++i) {
        if (!std::getline(in, line)) return fail("truncated header");
        header.push_back(line);
    }
    if (header[0] != kMagic) return fail("missing magic line");
    if (header[1] != "p=" + std::to_string(p)) return fail("prime mismatch");
    if (header[2] != "a=" + std::to_string(a)) return fail("modulus mismatch");
    if (header[3] != std::string("version=") + QUINTICS_VERSION) return fail("version mismatch");
    if (header[4].rfind("sha256=", 0) != 0) return fail("missing hash");
    const std::size_t offset = [&] {
        std::size_t pos = 0;
        for (int i = 0; i < 5; ++i) pos = text.find('\n', pos) + 1;
        return pos;
    }();
    const std::string body = text.substr(offset);
    if (sha256_hex(body) != header[4].substr(7)) return fail("hash mismatch");
    CurveScan scan{p, a, {}, 0.0};
    std::istringstream bin(body);
    while (std::getline(bin, line)) {
        RawPoint x{};
        std::istringstream ls(line);
        std::string cell;
        std::size_t i = 0;
        while (std::getline(ls, cell, ',')) {
            if (i >= 5) return fail("malformed point line");
            try {
                x[i++] = static_cast<std::uint32_t>(std::stoul(cell));
            } catch (const std::exception&) {
                return fail("malformed point line");
            }
        }
        if (i != 5) return fail("malformed point line");
        scan.points.push_back(x);
    }
    if (!std::is_sorted(scan.points.begin(), scan.points.end())) return fail("points not sorted");
    const MooreRaw mr(p, a);
    for (const auto& x : scan.points)
        if (!mr.on_curve(x)) return fail("cached point off the curve");
    return scan;
}

CurveScan load_or_scan(std::uint32_t p, std::uint32_t a, const std::filesystem::path& cache_dir, CacheReport* report) {
    CacheReport local;
    CacheReport& rep = report ? *report : local;
    if (cache_dir.empty()) {
        rep.outcome = CacheReport::Outcome::kDisabled;
        return scan_curve(p, a);
    }
    const auto path = cache_dir / cache_file_name(p, a);
    rep.path = path.string();
    bool existed = false;
    if (std::ifstream in{path, std::ios::binary}) {
        existed = true;
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string why;
        if (auto scan = parse_scan(buf.str(), p, a, &why)) {
            rep.outcome = CacheReport::Outcome::kHit;
            return *scan;
        }
        rep.reason = why;
    }
    CurveScan scan = scan_curve(p, a);
    std::filesystem::create_directories(cache_dir);
    const auto tmp = path.string() + ".tmp" + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << serialize_scan(scan);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    }
    std::filesystem::rename(tmp, path);
    rep.outcome = existed ? CacheReport::Outcome::kRescanned : CacheReport::Outcome::kWritten;
    return scan;
}

}  // namespace quintics
