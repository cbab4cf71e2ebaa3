#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclophi/census.hpp"
#include "cyclophi/coeff_engine.hpp"
#include "cyclophi/errors.hpp"
#include "cyclophi/newton_sigma.hpp"
#include "cyclophi/numthy.hpp"
#include "cyclophi/symmetry.hpp"
#include "cyclophi/version.hpp"

namespace py = pybind11;
using namespace cyclophi;

namespace {

engine::CoeffVec compute_coeffs(std::uint64_t n, const std::string& engine_name) {
    if (engine_name == "division") return engine::phi_poly_division(n);
    if (engine_name == "series" || engine_name == "auto") return engine::phi_poly_series(n);
    throw std::invalid_argument("engine must be 'series', 'division', or 'auto'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cyclotomic-coefficient engines, census scans, and symmetry diagnostics";
    m.attr("__version__") = std::string(kVersion);

    py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);

    m.def("factorize", [](std::uint64_t n) {
        std::vector<std::pair<std::uint64_t, int>> out;
        for (const numthy::PrimePower& pp : numthy::factorize(n).factors)
            out.emplace_back(pp.prime, pp.exponent);
        return out;
    }, py::arg("n"), "Prime factorization as (prime, exponent) pairs, primes ascending.");

    m.def("mobius", [](std::uint64_t n) { return numthy::mobius(n); }, py::arg("n"));
    m.def("totient", [](std::uint64_t n) { return numthy::totient(n); }, py::arg("n"));
    m.def("divisors", [](std::uint64_t n) { return numthy::divisors(n); }, py::arg("n"),
          "All positive divisors, ascending.");
    m.def("radical", &numthy::radical, py::arg("n"));
    m.def("is_prime", &numthy::is_prime, py::arg("n"));

    py::class_<numthy::OddSquarefreeProfile>(m, "OddSquarefreeProfile")
        .def_readonly("primes", &numthy::OddSquarefreeProfile::primes)
        .def_readonly("t", &numthy::OddSquarefreeProfile::t)
        .def_readonly("r", &numthy::OddSquarefreeProfile::r)
        .def("__repr__", [](const numthy::OddSquarefreeProfile& p) {
            std::string s = "OddSquarefreeProfile(primes=[";
            for (std::size_t i = 0; i < p.primes.size(); ++i) {
                if (i) s += ", ";
                s += std::to_string(p.primes[i]);
            }
            return s + "], t=" + std::to_string(p.t) + ", r=" + std::to_string(p.r) + ")";
        });
    m.def("odd_squarefree_profile", [](std::uint64_t n) -> py::object {
        if (auto p = numthy::odd_squarefree_profile(n)) return py::cast(*p);
        return py::none();
    }, py::arg("n"), "Profile of an odd squarefree n with >= 2 prime factors, else None.");

    m.def("phi_coefficients", [](std::uint64_t n, const std::string& engine_name) {
        return compute_coeffs(n, engine_name).coeffs;
    }, py::arg("n"), py::arg("engine") = "series",
       "Dense coefficient list, index j = coefficient of x^j.");

    m.def("coefficient_value_set", [](std::uint64_t n, const std::string& engine_name) {
        return engine::coefficient_value_set(compute_coeffs(n, engine_name));
    }, py::arg("n"), py::arg("engine") = "series", "Sorted distinct coefficient values.");

    m.def("power_sum", &newton::power_sum, py::arg("n"), py::arg("k"),
          "Power sum of primitive roots for odd squarefree n.");
    m.def("power_sum_general", &newton::power_sum_general, py::arg("n"), py::arg("k"));

    m.def("sigma_prefix", [](std::uint64_t n, std::size_t count) {
        return newton::sigma_prefix(n, count).sigma;
    }, py::arg("n"), py::arg("count"),
       "sigma[k] = coefficient at x^(totient(n)-k), for k = 0..count.");

    m.def("sigma_closed_form", &newton::sigma_closed_form, py::arg("n"), py::arg("k"));

    py::class_<newton::TheoremMainReport>(m, "TheoremMainReport")
        .def_readonly("primes", &newton::TheoremMainReport::primes)
        .def_readonly("n", &newton::TheoremMainReport::n)
        .def_readonly("degree", &newton::TheoremMainReport::degree)
        .def_readonly("t", &newton::TheoremMainReport::t)
        .def_readonly("r", &newton::TheoremMainReport::r)
        .def_readonly("guaranteed", &newton::TheoremMainReport::guaranteed)
        .def_readonly("extra_minus", &newton::TheoremMainReport::extra_minus)
        .def_readonly("verified", &newton::TheoremMainReport::verified)
        .def_readonly("witness", &newton::TheoremMainReport::witness)
        .def("__repr__", [](const newton::TheoremMainReport& r) {
            return "TheoremMainReport(n=" + std::to_string(r.n) +
                   ", r=" + std::to_string(r.r) +
                   ", verified=" + (r.verified ? std::string("True") : std::string("False")) +
                   ")";
        });
    m.def("verify_theorem_main", &newton::verify_theorem_main, py::arg("primes"),
          "Witness search for the guaranteed coefficient range of the index-2n polynomial.");

    m.def("scan_census", [](std::uint64_t n_limit) {
        std::vector<std::pair<std::uint64_t, std::vector<std::int64_t>>> out;
        for (census::CensusRow& row : census::scan_census(n_limit))
            out.emplace_back(row.n, std::move(row.values));
        return out;
    }, py::arg("n_limit"), "Rows (n, sorted nontrivial values) for every index with any.");

    m.def("scan_first_appearances", [](std::uint64_t count, std::uint64_t n_limit) {
        census::FirstAppearanceScan scan = census::scan_first_appearances(count, n_limit);
        std::vector<std::tuple<std::uint64_t, std::int64_t, std::uint64_t>> records;
        for (const census::FirstAppearanceRecord& rec : scan.records)
            records.emplace_back(rec.ordinal, rec.c, rec.n);
        return py::make_tuple(records, scan.complete, scan.scanned_to);
    }, py::arg("count"), py::arg("n_limit") = std::uint64_t{500000},
       "((ordinal, c, n) list, complete, scanned_to).");

    m.def("hausdorff", &symmetry::hausdorff_points, py::arg("a"), py::arg("b"),
          "Hausdorff distance between two nonempty 2-D point lists.");

    m.def("symmetry_report", [](const std::vector<std::pair<std::int64_t, std::uint64_t>>& raw,
                                std::uint64_t cutoff, double trim) {
        std::vector<census::Point> pts;
        pts.reserve(raw.size());
        for (const auto& [c, n] : raw) pts.push_back(census::Point{c, n});
        const symmetry::SymmetryReport r =
            symmetry::symmetry_report(cutoff, census::PointSet(std::move(pts)), trim);
        py::dict d;
        d["cutoff"] = r.cutoff;
        d["c_k"] = r.rect.c_k;
        d["n_k"] = r.rect.n_k;
        d["count_pos"] = r.count_pos;
        d["count_neg"] = r.count_neg;
        d["hausdorff_full"] = r.hausdorff_full;
        d["hausdorff_trimmed"] = r.hausdorff_trimmed;
        d["trim"] = r.trim;
        d["degenerate"] = r.degenerate;
        return d;
    }, py::arg("points"), py::arg("cutoff"), py::arg("trim") = 0.02,
       "Symmetry diagnostic for (c, n) lattice points under one cutoff.");
}
