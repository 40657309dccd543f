// module.cpp — python bindings for the main operations.  Structured dumps
// cross the boundary as JSON text; the package wrapper turns them into
// dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primexp/census.hpp"
#include "primexp/formula.hpp"
#include "primexp/json_io.hpp"
#include "primexp/oracle.hpp"
#include "primexp/strings.hpp"

namespace py = pybind11;
using namespace primexp;

namespace {

SymCompanionGraph make_graph(int n, int alpha, int eps, const std::string& y) {
    return SymCompanionGraph(n, ClassTag{alpha == 1, eps == 1}, parse_y_bits(y));
}

CensusOptions make_options(int jobs, int cap, bool use_cache) {
    CensusOptions opts;
    opts.jobs = jobs;
    opts.cap = cap;
    opts.use_cache = use_cache;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "primitive exponents of symmetric companion matrices";

    py::register_exception<invalid_order_error>(m, "InvalidOrderError",
                                                PyExc_ValueError);
    py::register_exception<structural_error>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<imprimitive_error>(m, "ImprimitiveError", PyExc_ValueError);

    py::class_<SymCompanionGraph>(m, "SymCompanionGraph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("alpha"), py::arg("eps"),
             py::arg("y") = std::string())
        .def_property_readonly("n", &SymCompanionGraph::order)
        .def_property_readonly("alpha",
                               [](const SymCompanionGraph& g) { return g.tag().alpha; })
        .def_property_readonly("eps",
                               [](const SymCompanionGraph& g) { return g.tag().eps; })
        .def_property_readonly("y", &SymCompanionGraph::y_string)
        .def_property_readonly("row", &SymCompanionGraph::row_string)
        .def("has_edge", &SymCompanionGraph::has_edge)
        .def("__repr__", [](const SymCompanionGraph& g) {
            return "SymCompanionGraph(n=" + std::to_string(g.order()) + ", class=(" +
                   to_string(g.tag()) + "), y=" + g.y_string() + ")";
        });

    m.def("graph_from_row", &graph_from_row, py::arg("row"), py::arg("loop") = false);
    m.def("is_primitive", py::overload_cast<const SymCompanionGraph&>(&is_primitive));
    m.def("is_primitive_formula",
          py::overload_cast<const SymCompanionGraph&>(&is_primitive_formula));

    m.def("exponent_formula", [](const SymCompanionGraph& g) {
        ExponentResult r = exponent_formula(g);
        return py::make_tuple(r.value, std::string(rule_name(r.rule)));
    });
    m.def("exponent_oracle_bfs",
          py::overload_cast<const SymCompanionGraph&>(&exponent_oracle_bfs));
    m.def("exponent_oracle_power",
          py::overload_cast<const SymCompanionGraph&>(&exponent_oracle_power));
    m.def("exp_pair", py::overload_cast<const SymCompanionGraph&, int, int>(&exp_pair),
          py::arg("g"), py::arg("i"), py::arg("j"));

    m.def("struct_params_json",
          [](const SymCompanionGraph& g) { return struct_params_json(g).dump(); });
    m.def("describe_json",
          [](const SymCompanionGraph& g) { return describe_graph_json(g).dump(); });

    m.def("exponent_set", [](int n, int alpha, int eps) {
        return exponent_set_formula(n, ClassTag{alpha == 1, eps == 1});
    });
    m.def("exponent_set_10_by_k", [](int n, int k) {
        KStratifiedSet s = exponent_set_10_by_k(n, k);
        return py::make_tuple(s.covered, s.exponents, s.clause, s.note);
    });

    m.def("f_count", &f_count, py::arg("n"), py::arg("q"), py::arg("k"));
    m.def("t_count", &t_count, py::arg("r"), py::arg("n"));
    m.def("n11_count", &n11_count, py::arg("n"), py::arg("b"));
    m.def("n01_count", &n01_count, py::arg("n"), py::arg("b"));
    m.def("s10_allowed_k", &s10_allowed_k, py::arg("n"), py::arg("b"));
    m.def("n10_extremal", [](int n) -> py::object {
        if (auto v = n10_extremal(n)) return py::cast(*v);
        return py::none();
    });
    m.def("n10_lowest", &n10_lowest);
    m.def("n00_extremal", &n00_extremal);
    m.def("n00_lowest_bounds", [](int n) {
        CountBounds b = n00_lowest_bounds(n);
        return py::make_tuple(b.lo, b.hi);
    });

    m.def("expected_primitive_count", [](int n, int alpha, int eps) {
        return expected_primitive_count(n, ClassTag{alpha == 1, eps == 1});
    });
    m.def(
        "census_json",
        [](int n, int alpha, int eps, int jobs, int cap, bool use_cache) {
            return census_json(run_census(n, ClassTag{alpha == 1, eps == 1},
                                          make_options(jobs, cap, use_cache)))
                .dump();
        },
        py::arg("n"), py::arg("alpha"), py::arg("eps"), py::arg("jobs") = 0,
        py::arg("cap") = 16, py::arg("use_cache") = true);

    m.attr("__version__") = "0.1.0";
}
