#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "quintics/hesse/curve_group.hpp"
#include "quintics/lattice/forms.hpp"
#include "quintics/probe/scan.hpp"
#include "quintics/report/report.hpp"
#include "quintics/report/run.hpp"

namespace py = pybind11;
using namespace quintics;

namespace {

// Reports cross the boundary as JSON text; the Python side parses it.
std::string run_json(const std::vector<std::string>& suites, const std::vector<std::uint32_t>& primes,
                     const std::map<std::uint32_t, std::vector<std::uint32_t>>& a_values, std::uint64_t seed, bool symbolic_a,
                     const std::string& cache_dir, const std::string& lattice_dir, std::uint32_t witness_bound, unsigned jobs) {
    RunConfig c;
    c.suites = suites;
    c.primes = primes;
    c.a_values = a_values;
    c.seed = seed;
    c.symbolic_a = symbolic_a;
    c.cache_dir = cache_dir;
    c.lattice_dir = lattice_dir;
    c.witness_bound = witness_bound;
    c.jobs = jobs;
    VerificationReport r;
    {
        py::gil_scoped_release release;
        r = run(c);
    }
    return to_json(r).dump();
}

std::vector<std::array<std::uint32_t, 5>> scan_points(std::uint32_t p, std::uint32_t a, const std::string& cache_dir) {
    CurveScan s;
    {
        py::gil_scoped_release release;
        s = load_or_scan(p, a, cache_dir);
    }
    return s.points;
}

py::dict hesse_group(std::uint32_t p, std::uint32_t lambda) {
    const PrimeContext ctx(p);
    const CurveGroup g(FpCubic::hesse(PrimeFieldNum(ctx, lambda)));
    const auto [n1, n2] = g.structure();
    py::dict d;
    d["order"] = g.order();
    d["structure"] = py::make_tuple(n1, n2);
    d["in_hasse_interval"] = g.in_hasse_interval();
    return d;
}

long long lattice_product(const std::string& form, const std::vector<std::string>& classes, const std::string& tables_dir) {
    const LatticeTables t = load_lattice_tables(tables_dir);
    const IntersectionForm* f = nullptr;
    for (const IntersectionForm* cand : {static_cast<const IntersectionForm*>(&t.secant_bundle), static_cast<const IntersectionForm*>(&t.resolved_secant),
                                         static_cast<const IntersectionForm*>(&t.symmetric_square), static_cast<const IntersectionForm*>(&t.abelian_blowup)})
        if (cand->name() == form) f = cand;
    if (!f) throw std::invalid_argument("unknown intersection form '" + form + "'");
    std::vector<DivisorClass> ds;
    for (const auto& c : classes) ds.push_back(f->combination(c));
    return f->product(ds);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bindings to the quintics verification library";
    m.attr("__version__") = QUINTICS_VERSION;
    m.attr("CACHE_DIR_ENV") = kCacheDirEnv;

    py::register_exception<LatticeError>(m, "LatticeError", PyExc_ValueError);

    m.def("all_suites", &all_suites, "Suite names in run order.");
    m.def("supported_primes", &supported_primes, "Primes accepted by the finite-field suites.");
    m.def("admissible_moduli", &admissible_moduli, py::arg("p"), py::arg("count") = 2, "First values a >= 2 that give a smooth curve mod p.");
    m.def("is_admissible", &is_admissible, py::arg("p"), py::arg("a"));
    m.def("run_json", &run_json, py::arg("suites"), py::arg("primes"), py::arg("a_values"), py::arg("seed"), py::arg("symbolic_a"), py::arg("cache_dir"),
          py::arg("lattice_dir"), py::arg("witness_bound"), py::arg("jobs"));
    m.def("render_markdown_json", [](const std::string& text) { return render_markdown(report_from_json(nlohmann::json::parse(text))); },
          py::arg("report_json"));
    m.def("scan_curve", &scan_points, py::arg("p"), py::arg("a"), py::arg("cache_dir") = "",
          "Points of the curve cut out by the five quadrics over F_p, normalized and sorted.");
    m.def("hesse_group", &hesse_group, py::arg("p"), py::arg("lam"), "Order and group structure of the Hesse cubic with parameter lam over F_p.");
    m.def("lattice_product", &lattice_product, py::arg("form"), py::arg("classes"), py::arg("tables_dir") = "",
          "Intersection number of the given class expressions on a named form.");
}
