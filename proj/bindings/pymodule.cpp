#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sphsum/binary.hpp"
#include "sphsum/bounds.hpp"
#include "sphsum/discrepancy.hpp"
#include "sphsum/errors.hpp"
#include "sphsum/families.hpp"
#include "sphsum/oracle.hpp"
#include "sphsum/verify.hpp"

namespace py = pybind11;
using namespace sphsum;

namespace {

Eigenspace parse_eigenspace(const std::string& which) {
    if (which == "first") return Eigenspace::First;
    if (which == "second") return Eigenspace::Second;
    throw RangeError("eigenspace must be 'first' or 'second'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bounds on sums of pairwise distances of spherical codes, code family "
              "constructors, and discrepancy conversions";

    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<SpectrumEntry>(m, "SpectrumEntry")
        .def_readonly("value", &SpectrumEntry::value)
        .def_readonly("multiplicity", &SpectrumEntry::multiplicity)
        .def("__repr__", [](const SpectrumEntry& e) {
            std::ostringstream out;
            out << "SpectrumEntry(value=" << e.value << ", multiplicity=" << e.multiplicity << ")";
            return out.str();
        });

    py::class_<InnerProductSpectrum>(m, "InnerProductSpectrum")
        .def(py::init([](int dimension, long long size,
                         const std::vector<std::pair<double, double>>& entries) {
                 InnerProductSpectrum spec;
                 spec.dimension = dimension;
                 spec.size = size;
                 for (const auto& [v, mult] : entries) spec.entries.push_back({v, mult});
                 std::sort(spec.entries.begin(), spec.entries.end(),
                           [](const SpectrumEntry& x, const SpectrumEntry& y) {
                               return x.value < y.value;
                           });
                 spec.validate();
                 return spec;
             }),
             py::arg("dimension"), py::arg("size"), py::arg("entries"))
        .def_readonly("dimension", &InnerProductSpectrum::dimension)
        .def_readonly("size", &InnerProductSpectrum::size)
        .def_readonly("entries", &InnerProductSpectrum::entries)
        .def_property_readonly("separation", &InnerProductSpectrum::separation)
        .def("validate", &InnerProductSpectrum::validate);

    py::class_<WeightCount>(m, "WeightCount")
        .def_readonly("w", &WeightCount::w)
        .def_readonly("count", &WeightCount::count);

    py::class_<BinaryDistanceDistribution>(m, "BinaryDistanceDistribution")
        .def_readonly("length", &BinaryDistanceDistribution::length)
        .def_readonly("size", &BinaryDistanceDistribution::size)
        .def_readonly("counts", &BinaryDistanceDistribution::counts)
        .def("count", &BinaryDistanceDistribution::count, py::arg("w"))
        .def("validate", &BinaryDistanceDistribution::validate);

    py::class_<SrgParameters>(m, "SrgParameters")
        .def(py::init([](long long v, long long k, long long a, long long c) {
                 SrgParameters p{v, k, a, c};
                 p.validate();
                 return p;
             }),
             py::arg("v"), py::arg("k"), py::arg("a"), py::arg("c"))
        .def_readonly("v", &SrgParameters::v)
        .def_readonly("k", &SrgParameters::k)
        .def_readonly("a", &SrgParameters::a)
        .def_readonly("c", &SrgParameters::c)
        .def_property_readonly("r1", &SrgParameters::r1)
        .def_property_readonly("r2", &SrgParameters::r2)
        .def_property_readonly("n1", &SrgParameters::n1)
        .def_property_readonly("n2", &SrgParameters::n2);

    // polynomial machinery
    m.def("gegenbauer_eval", &gegenbauer_eval, py::arg("n"), py::arg("i"), py::arg("t"));
    m.def("jacobi_adjacent_eval", &jacobi_adjacent_eval, py::arg("n"), py::arg("eps"),
          py::arg("i"), py::arg("t"));

    // cardinality bounds and quadrature
    m.def("design_threshold", &design_threshold, py::arg("n"), py::arg("m"));
    m.def("select_degree", &select_degree, py::arg("n"), py::arg("N"));
    m.def("lev_bound", &lev_bound, py::arg("n"), py::arg("s"), py::arg("m"));
    m.def("solve_s", &solve_s, py::arg("n"), py::arg("N"), py::arg("m"));

    // distance-sum bounds
    m.def("ulb", &ulb_closed, py::arg("n"), py::arg("N"),
          "Upper bound on the sum of pairwise distances");
    m.def("ulb_pipeline", &ulb_pipeline, py::arg("n"), py::arg("N"));
    m.def("uub", &uub_pipeline, py::arg("n"), py::arg("N"), py::arg("s"),
          "Lower bound on the sum of distances at separation s");
    m.def("uub_closed", static_cast<double (*)(int, long long, double)>(&uub_closed),
          py::arg("n"), py::arg("N"), py::arg("s"));
    m.def("trivial_bound", &trivial_bound, py::arg("n"), py::arg("N"));

    // families
    m.def("sum_of_distances", &sum_of_distances, py::arg("spectrum"));
    m.def("frame_potential", &frame_potential, py::arg("spectrum"));
    m.def("equiangular_spectrum", &equiangular_spectrum, py::arg("M"), py::arg("s"), py::arg("n"));
    m.def("de_caen_parameters", [](int r) {
        const DeCaenParameters p = de_caen_parameters(r);
        return py::make_tuple(p.n, p.N, p.s);
    }, py::arg("r"));
    m.def("srg_embedding", [](const SrgParameters& p, const std::string& eigenspace) {
        return srg_embedding(p, parse_eigenspace(eigenspace));
    }, py::arg("params"), py::arg("eigenspace") = "first");
    m.def("quadric_srg", &quadric_srg, py::arg("m"), py::arg("q"));
    m.def("hyperbolic_srg", &hyperbolic_srg, py::arg("m"), py::arg("q"));
    m.def("sidelnikov", &sidelnikov, py::arg("r"));
    m.def("kerdock", &kerdock, py::arg("m"));
    m.def("dual_bch", &dual_bch, py::arg("r"));
    m.def("dual_bch_printed", &dual_bch_printed, py::arg("r"));
    m.def("weight_two", &weight_two, py::arg("n"));
    m.def("spherical_embedding", &spherical_embedding, py::arg("distribution"));
    m.def("distance_distribution", [](const std::vector<std::string>& words) {
        return distance_distribution(BinaryCode::from_strings(words));
    }, py::arg("words"));

    // discrepancy
    m.def("mean_distance", &mean_distance, py::arg("n"));
    m.def("stolarsky_constant", &stolarsky_constant, py::arg("n"));
    m.def("spherical_discrepancy", &spherical_discrepancy, py::arg("tau"), py::arg("n"),
          py::arg("N"));
    m.def("binary_discrepancy", &binary_discrepancy, py::arg("distribution"));
    m.def("lambda_table", [](int n) {
        const LambdaPotential table(n);
        std::vector<double> vals(static_cast<std::size_t>(n) + 1);
        for (int w = 0; w <= n; ++w) vals[static_cast<std::size_t>(w)] = table.value(w);
        return vals;
    }, py::arg("n"));

    // verification
    m.def("verify", [](const std::string& level, std::uint64_t seed) {
        VerifyOptions opts;
        opts.level = level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
        opts.seed = seed;
        std::vector<std::map<std::string, std::string>> out;
        for (const auto& c : run_verify(opts))
            out.push_back({{"check", c.name},
                           {"status", c.passed ? "PASS" : "FAIL"},
                           {"detail", c.detail}});
        return out;
    }, py::arg("level") = "quick", py::arg("seed") = kDefaultSeed);
}
