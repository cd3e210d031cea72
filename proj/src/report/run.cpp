#include "quintics/report/run.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

#include "quintics/heisenberg/suite.hpp"
#include "quintics/heisenberg/tensor.hpp"
#include "quintics/hesse/suite.hpp"
#include "quintics/lattice/suite.hpp"
#include "quintics/moore/suite.hpp"
#include "quintics/probe/suite.hpp"

namespace quintics {

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names{"hesse", "heisenberg", "sections", "moore", "scan", "secants", "incidence", "cremona", "lattice"};
    return names;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
    std::set<std::string> wanted;
    for (const auto& item : requested) {
        std::stringstream ss(item);
        for (std::string name; std::getline(ss, name, ',');) {
            if (name.empty()) continue;
            if (name == "all") {
                wanted.insert(all_suites().begin(), all_suites().end());
            } else if (std::find(all_suites().begin(), all_suites().end(), name) != all_suites().end()) {
                wanted.insert(name);
            } else {
                throw std::invalid_argument("unknown suite '" + name + "'");
            }
        }
    }
    std::vector<std::string> out;
    for (const auto& s : all_suites())
        if (wanted.count(s)) out.push_back(s);
    return out;
}

nlohmann::json config_echo(const RunConfig& c) {
    nlohmann::json a = nlohmann::json::object();
    for (const auto p : c.primes) {
        if (auto it = c.a_values.find(p); it != c.a_values.end()) a[std::to_string(p)] = it->second;
        else a[std::to_string(p)] = "auto";
    }
    return {{"suites", c.suites},
            {"primes", c.primes},
            {"a_values", a},
            {"seed", c.seed},
            {"symbolic_a", c.symbolic_a},
            {"cache_dir", c.cache_dir.string()},
            {"lattice_tables", c.lattice_dir.empty() ? std::string("embedded") : c.lattice_dir.string()},
            {"witness_bound", c.witness_bound}};
}

std::map<std::uint32_t, std::vector<std::uint32_t>> parse_a_values(const std::vector<std::string>& specs,
                                                                   const std::vector<std::uint32_t>& primes) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> out;
    auto number = [](const std::string& s) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || v > 0xffffffffUL) throw std::invalid_argument("bad number '" + s + "' in --a");
        return static_cast<std::uint32_t>(v);
    };
    auto push_unique = [](std::vector<std::uint32_t>& v, std::uint32_t x) {
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    };
    for (const auto& spec : specs) {
        if (spec == "auto") continue;
        const auto eq = spec.find('=');
        std::vector<std::uint32_t> targets = primes;
        std::string list = spec;
        if (eq != std::string::npos) {
            targets = {number(spec.substr(0, eq))};
            list = spec.substr(eq + 1);
        }
        std::stringstream ss(list);
        for (std::string item; std::getline(ss, item, ',');)
            for (const auto p : targets) push_unique(out[p], number(item));
    }
    return out;
}

void validate(const RunConfig& c) {
    const auto& supported = supported_primes();
    for (const auto p : c.primes)
        if (std::find(supported.begin(), supported.end(), p) == supported.end()) {
            std::string list;
            for (const auto s : supported) list += (list.empty() ? "" : ", ") + std::to_string(s);
            throw std::invalid_argument("prime " + std::to_string(p) + " is not supported (supported: " + list + ")");
        }
    for (const auto& [p, as] : c.a_values) {
        if (std::find(c.primes.begin(), c.primes.end(), p) == c.primes.end())
            throw std::invalid_argument("moduli given for prime " + std::to_string(p) + " which is not selected");
        for (const auto a : as)
            if (a >= p || !is_admissible(p, a))
                throw std::invalid_argument("a = " + std::to_string(a) + " is not an admissible modulus for p = " + std::to_string(p));
    }
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs one suite body and turns escaping exceptions into a failed claim.
Claims guarded(const std::string& suite, const std::function<Claims()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        ClaimRecord c = hard_claim(suite + ".error", "the suite ran to completion", false, {{"exception", e.what()}});
        c.suite = suite;
        return {c};
    }
}

}  // namespace

VerificationReport run(const RunConfig& config, const ProgressFn& progress) {
    validate(config);
    const auto suites = expand_suites(config.suites);
    VerificationReport report;
    report.toolkit_version = QUINTICS_VERSION;
    RunConfig echoed = config;
    echoed.suites = suites;
    report.config = config_echo(echoed);

    ProbeOptions probe_options;
    probe_options.primes = config.primes;
    probe_options.a_values = config.a_values;
    probe_options.seed = config.seed;
    probe_options.cache_dir = config.cache_dir;
    ProbeRunner probe(probe_options);

    std::map<std::string, std::function<Claims()>> bodies{
        {"hesse",
         [&] {
             HesseOptions o;
             o.primes = config.primes;
             o.seed = config.seed;
             o.witness_bound = config.witness_bound;
             return verify_hesse(o);
         }},
        {"heisenberg", [] { return verify_heisenberg(); }},
        {"sections", [] { return verify_section_symmetries(); }},
        {"moore", [&] { return config.symbolic_a ? verify_moore() : verify_moore_at(CycloNum(2)); }},
        {"scan", [&] { return probe.verify_scan(); }},
        {"secants", [&] { return probe.verify_secants(); }},
        {"incidence", [&] { return probe.verify_incidence(); }},
        {"cremona", [&] { return probe.verify_cremona(); }},
        {"lattice", [&] { return verify_lattice(load_lattice_tables(config.lattice_dir)); }},
    };

    std::map<std::string, std::pair<Claims, SuiteRun>> results;
    std::mutex mu;
    auto run_one = [&](const std::string& name) {
        const auto t0 = Clock::now();
        Claims claims = guarded(name, bodies.at(name));
        for (auto& c : claims) c.suite = name;
        SuiteRun done{name, claims.size(), std::chrono::duration<double>(Clock::now() - t0).count()};
        std::lock_guard lock(mu);
        results[name] = {std::move(claims), done};
        if (progress) progress(name, done);
    };

    // the finite-field suites share one set of curve scans and run in sequence after it
    const std::set<std::string> probe_chain{"scan", "secants", "incidence", "cremona"};
    std::vector<std::string> chain, independent;
    for (const auto& s : suites) (probe_chain.count(s) ? chain : independent).push_back(s);
    auto run_chain = [&] {
        for (const auto& s : chain) run_one(s);
    };

    if (config.jobs > 1) {
        std::vector<std::future<void>> pending;
        if (!chain.empty()) pending.push_back(std::async(std::launch::async, run_chain));
        for (const auto& s : independent) pending.push_back(std::async(std::launch::async, run_one, s));
        for (auto& f : pending) f.get();
    } else {
        for (const auto& s : suites)
            if (!probe_chain.count(s)) run_one(s);
            else if (s == chain.front()) run_chain();
    }

    for (const auto& s : suites) {
        auto& [claims, done] = results.at(s);
        report.suites.push_back(done);
        report.claims.insert(report.claims.end(), claims.begin(), claims.end());
    }
    if (!chain.empty()) {
        for (const auto& c : probe.configs())
            report.cache.push_back({{"p", c.p}, {"a", c.a}, {"outcome", to_string(c.cache.outcome)}, {"path", c.cache.path}, {"reason", c.cache.reason},
                                    {"error", c.error}});
    }
    return report;
}

}  // namespace quintics
