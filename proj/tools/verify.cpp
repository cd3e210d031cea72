// verify: runs the verification suites, scans single curves and renders saved reports.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quintics/probe/scan.hpp"
#include "quintics/report/run.hpp"

namespace {

using namespace quintics;

// An explicit --cache-dir wins; otherwise the environment variable, otherwise no cache.
std::filesystem::path resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
    return {};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and finite-field verification of Heisenberg-invariant quintic geometry"};
    app.set_version_flag("--version", std::string(QUINTICS_VERSION));
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "run verification suites and write a report");
    std::vector<std::string> suites{"all"};
    std::vector<std::uint32_t> primes;
    std::vector<std::string> a_specs{"auto"};
    std::uint64_t seed = 42;
    std::string report_path, cache_flag, lattice_dir, format = "json";
    bool strict = false, quiet = false, numeric_a = false;
    unsigned jobs = 1;
    std::uint32_t witness_bound = 2000;
    run_cmd->add_option("--suites", suites, "suites to run: all or any of hesse, heisenberg, sections, moore, scan, secants, incidence, cremona, lattice")
        ->delimiter(',');
    run_cmd->add_option("--prime", primes, "prime for the finite-field suites (repeatable; default 31 and 61)");
    run_cmd->add_option("--a", a_specs, "modulus a: auto, a value for every prime, or p=a1,a2 (repeatable)");
    run_cmd->add_option("--seed", seed, "seed for every random sample")->capture_default_str();
    run_cmd->add_option("--report", report_path, "write the JSON report here");
    run_cmd->add_option("--format", format, "format printed on stdout when no --report is given")->check(CLI::IsMember({"json", "markdown"}));
    run_cmd->add_option("--cache-dir", cache_flag, std::string("point cache directory (default: $") + kCacheDirEnv + ", else no cache)");
    run_cmd->add_option("--lattice-tables", lattice_dir, "directory with intersection tables (default: built-in copies)");
    run_cmd->add_option("--witness-bound", witness_bound, "largest prime searched for the torsion witness curve")->capture_default_str();
    run_cmd->add_option("--jobs", jobs, "run independent suites concurrently")->check(CLI::Range(1u, 64u))->capture_default_str();
    run_cmd->add_flag("--numeric-a", numeric_a, "run the Moore suite at a = 2 instead of symbolic a");
    run_cmd->add_flag("--strict", strict, "soft-check failures also give a nonzero exit status");
    run_cmd->add_flag("--quiet", quiet, "no progress lines on stderr");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "scan one curve E(F_p) and fill the point cache");
    std::uint32_t scan_p = 31, scan_a = 2;
    std::string scan_cache;
    bool print_points = false;
    scan_cmd->add_option("--prime", scan_p, "prime")->required();
    scan_cmd->add_option("--a", scan_a, "modulus a")->required();
    scan_cmd->add_option("--cache-dir", scan_cache, std::string("point cache directory (default: $") + kCacheDirEnv + ")");
    scan_cmd->add_flag("--points", print_points, "print the points");

    // report
    auto* report_cmd = app.add_subcommand("report", "render a saved JSON report");
    std::string input, report_format = "markdown";
    bool report_strict = false;
    report_cmd->add_option("input", input, "JSON report file")->required()->check(CLI::ExistingFile);
    report_cmd->add_option("--format", report_format, "output format")->check(CLI::IsMember({"json", "markdown"}))->capture_default_str();
    report_cmd->add_flag("--strict", report_strict, "soft-check failures also give a nonzero exit status");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            RunConfig config;
            config.suites = suites;
            if (!primes.empty()) config.primes = primes;
            config.a_values = parse_a_values(a_specs, config.primes);
            config.seed = seed;
            config.symbolic_a = !numeric_a;
            config.cache_dir = resolve_cache_dir(cache_flag);
            config.lattice_dir = lattice_dir;
            config.witness_bound = witness_bound;
            config.jobs = jobs;
            ProgressFn progress;
            if (!quiet) {
                progress = [](const std::string& name, const SuiteRun& done) {
                    std::cerr << "[verify] " << name << ": " << done.claims << " claims in " << done.seconds << " s\n";
                };
            }
            const VerificationReport report = run(config, progress);
            if (!report_path.empty()) {
                write_file(report_path, render_json(report));
                if (!quiet) std::cerr << "[verify] report written to " << report_path << "\n";
            } else {
                std::cout << (format == "json" ? render_json(report) : render_markdown(report));
            }
            if (!quiet) {
                const auto s = to_json(report)["summary"];
                std::cerr << "[verify] " << s["claims"] << " claims: " << s["pass"] << " pass, " << s["soft_pass"] << " soft pass, " << s["fail"]
                          << " hard failures, " << s["soft_fail"] << " soft failures\n";
            }
            return exit_code(report, strict);
        }
        if (*scan_cmd) {
            CacheReport cache;
            const auto t0 = std::chrono::steady_clock::now();
            const CurveScan scan = load_or_scan(scan_p, scan_a, resolve_cache_dir(scan_cache), &cache);
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::cout << "p = " << scan.p << ", a = " << scan.a << ": " << scan.points.size() << " points ("
                      << (scan.in_hasse_interval() ? "inside" : "outside") << " the Hasse interval)\n";
            std::cout << "cache: " << to_string(cache.outcome);
            if (!cache.path.empty()) std::cout << " " << cache.path;
            if (!cache.reason.empty()) std::cout << " (" << cache.reason << ")";
            std::cout << "\ntime: " << dt << " s\n";
            if (print_points)
                for (const auto& x : scan.points) std::cout << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "," << x[4] << "\n";
            return scan.in_hasse_interval() ? 0 : 1;
        }
        if (*report_cmd) {
            const VerificationReport report = report_from_json(nlohmann::json::parse(read_file(input)));
            std::cout << (report_format == "json" ? render_json(report) : render_markdown(report));
            return exit_code(report, report_strict);
        }
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
