#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eigraph/indices.hpp"
#include "eigraph/report.hpp"
#include "eigraph/spectrum.hpp"
#include "eigraph/verify.hpp"

namespace py = pybind11;
using namespace eigraph;

namespace {

BigInt to_bigint(const py::int_& n) { return BigInt(py::str(n).cast<std::string>()); }

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

IdealGraph build_graph(const py::int_& n, std::size_t max_vertices) {
    return IdealGraph::build(to_bigint(n), max_vertices);
}

} // namespace

PYBIND11_MODULE(_eigraph, m) {
    m.doc() = "essential ideal graph of Z_n: construction, spectra, distance indices";

    py::class_<IdealGraph>(m, "Graph")
        .def_static("build", &build_graph, py::arg("n"),
                    py::arg("max_vertices") = 4096,
                    "graph on the nonzero proper ideals of Z_n")
        .def_property_readonly(
            "n", [](const IdealGraph& g) { return to_py(g.ring().value()); })
        .def_property_readonly(
            "factorization",
            [](const IdealGraph& g) { return g.ring().display(); })
        .def_property_readonly("vertex_count", &IdealGraph::vertex_count)
        .def_property_readonly("edge_count", &IdealGraph::edge_count)
        .def_property_readonly("squarefree",
                               [](const IdealGraph& g) { return g.ring().squarefree(); })
        .def("generators",
             [](const IdealGraph& g) {
                 py::list out;
                 for (const auto& v : g.vertices())
                     out.append(to_py(generator(v, g.ring())));
                 return out;
             },
             "vertex generators in canonical order")
        .def("edges",
             [](const IdealGraph& g) {
                 std::vector<std::pair<std::size_t, std::size_t>> out;
                 for (std::size_t i = 0; i < g.vertex_count(); ++i)
                     for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
                         if (g.edge(i, j)) out.emplace_back(i, j);
                 return out;
             },
             "edge list as vertex index pairs")
        .def("adjacent", &IdealGraph::edge, py::arg("i"), py::arg("j"))
        .def("degree", &IdealGraph::degree, py::arg("i"))
        .def("distance_matrix", &IdealGraph::distance_matrix)
        .def("__repr__", [](const IdealGraph& g) {
            return "Graph(n=" + g.ring().value().str() + ", vertices=" +
                   std::to_string(g.vertex_count()) + ", edges=" +
                   std::to_string(g.edge_count()) + ")";
        });

    m.def(
        "spectrum",
        [](const py::int_& n, double tol) {
            auto g = IdealGraph::build(to_bigint(n));
            auto s = eigenvalues_numeric(g, tol);
            auto closed = closed_form_spectrum(g.ring());
            if (closed) adopt_symbols(s, *closed);
            std::vector<std::tuple<double, std::size_t, std::string>> out;
            for (const auto& e : s.entries)
                out.emplace_back(e.value, e.multiplicity, e.symbol);
            return out;
        },
        py::arg("n"), py::arg("tol") = 1e-9,
        "clustered eigenvalues as (value, multiplicity, symbol) tuples, descending");

    m.def(
        "charpoly",
        [](const py::int_& n, std::size_t cap) {
            auto g = IdealGraph::build(to_bigint(n));
            py::list out;
            for (const BigInt& c : char_poly_exact(g, cap)) out.append(to_py(c));
            return out;
        },
        py::arg("n"), py::arg("cap") = 64,
        "det(A - xI) coefficients, ascending degree, exact integers");

    m.def(
        "energy",
        [](const py::int_& n) {
            auto g = IdealGraph::build(to_bigint(n));
            return spectrum_energy(eigenvalues_numeric(g));
        },
        py::arg("n"));

    m.def(
        "hyperenergetic",
        [](const py::int_& n) {
            auto g = IdealGraph::build(to_bigint(n));
            return is_hyperenergetic(eigenvalues_numeric(g));
        },
        py::arg("n"));

    m.def(
        "nullity",
        [](const py::int_& n) {
            return nullity_exact(IdealGraph::build(to_bigint(n)));
        },
        py::arg("n"), "kernel dimension of the adjacency matrix, exact");

    m.def(
        "zero_eigenvalue_predicted",
        [](const py::int_& n) {
            return zero_eigenvalue_predicted(factorize(to_bigint(n)));
        },
        py::arg("n"));

    m.def(
        "wiener",
        [](const py::int_& n) { return wiener(IdealGraph::build(to_bigint(n))); },
        py::arg("n"));

    m.def(
        "hyper_wiener_parts",
        [](const py::int_& n) {
            Rational r = hyper_wiener(IdealGraph::build(to_bigint(n)));
            return std::make_pair(r.num, r.den);
        },
        py::arg("n"), "hyper-Wiener index as a reduced (numerator, denominator) pair");

    m.def(
        "closed_wiener",
        [](const py::int_& n) -> py::object {
            auto w = closed_wiener(factorize(to_bigint(n)));
            if (!w) return py::none();
            return py::int_(*w);
        },
        py::arg("n"), "closed-form Wiener index, None when not covered");

    m.def(
        "closed_hyper_wiener_parts",
        [](const py::int_& n) -> py::object {
            auto w = closed_hyper_wiener(factorize(to_bigint(n)));
            if (!w) return py::none();
            return py::make_tuple(w->num, w->den);
        },
        py::arg("n"));

    m.def(
        "analyze_json",
        [](const py::int_& n) { return report_json(analyze(to_bigint(n))).dump(); },
        py::arg("n"), "full analysis report serialized as a JSON string");

    m.def(
        "verify_range",
        [](std::uint64_t lo, std::uint64_t hi, const std::string& check) {
            VerifyOptions opts;
            opts.checks = parse_check_set(check);
            auto s = verify_range(lo, hi, opts);
            return std::make_tuple(s.tested, s.passed, s.failed, s.skipped);
        },
        py::arg("lo"), py::arg("hi"), py::arg("check") = "all",
        "(tested, passed, failed, skipped) over composite n in [lo, hi]");
}
