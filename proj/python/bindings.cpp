#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "a2zeta/building.hpp"
#include "a2zeta/errors.hpp"
#include "a2zeta/graph.hpp"
#include "a2zeta/ingest.hpp"
#include "a2zeta/oracles.hpp"
#include "a2zeta/satake.hpp"
#include "a2zeta/zeta.hpp"

namespace py = pybind11;
using namespace a2zeta;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::str(x.get_str())); }

py::list coeffs(const IntPoly& p) {
    py::list out;
    for (const BigInt& c : p.coeffs()) out.append(to_py(c));
    return out;
}

py::tuple rational(const RationalFunction& r) { return py::make_tuple(coeffs(r.num()), coeffs(r.den())); }

py::dict bundle_dict(const ZetaBundle& b) {
    py::dict d;
    d["q"] = b.q;
    d["chi"] = b.chi;
    d["dvertex"] = coeffs(b.dvertex);
    d["pb"] = coeffs(b.pb);
    d["pe"] = coeffs(b.pe);
    d["pe2"] = coeffs(b.pe2);
    return d;
}

TypedComplex load_complex(const std::string& path) { return parse_complex(read_file(path)); }

}  // namespace

PYBIND11_MODULE(_a2zeta, m) {
    py::register_exception<a2zeta::Error>(m, "Error", PyExc_ValueError);

    py::class_<TypedComplex>(m, "Complex")
        .def_property_readonly("q", &TypedComplex::q)
        .def_property_readonly("vertex_count", &TypedComplex::vertex_count)
        .def_property_readonly("edge_count", &TypedComplex::edge_count)
        .def_property_readonly("chamber_count", &TypedComplex::chamber_count)
        .def("serialize", [](const TypedComplex& c) { return serialize_complex(c); });

    m.def("load_complex", &load_complex, py::arg("path"));
    m.def("parse_complex", [](const std::string& text) { return parse_complex(text); }, py::arg("text"));
    m.def("validate", [](const TypedComplex& c) {
        const ValidationReport r = validate(c);
        py::list checks;
        for (const Check& k : r.checks) checks.append(py::make_tuple(k.name, k.pass, k.detail));
        const Check* first = r.first_failure();
        return py::make_tuple(r.ok(), checks, first ? py::object(py::str(first->name)) : py::object(py::none()));
    });
    m.def("euler_characteristic", &euler_characteristic);

    m.def("search", [](int q, std::uint64_t seed, std::size_t limit) {
        const ProjectivePlane pl = build_plane(q);
        SearchOptions opts;
        opts.seed = seed;
        opts.limit = limit;
        std::vector<TypedComplex> out;
        for (const auto& tp : search_triangle_presentations(pl, opts)) out.push_back(complex_from_presentation(pl, tp));
        return out;
    }, py::arg("q"), py::arg("seed") = 0, py::arg("limit") = 1);

    m.def("zeta_bundle", [](const TypedComplex& c) { return bundle_dict(zeta_bundle(c)); });
    m.def("check_identity", [](const TypedComplex& c) { return check_main_identity(zeta_bundle(c)).pass; });
    m.def("zeta_functions", [](const TypedComplex& c) {
        const ZetaFunctions z = zeta_functions(zeta_bundle(c));
        py::dict d;
        d["z"] = rational(z.z);
        d["z1"] = rational(z.z1);
        d["z2"] = rational(z.z2);
        d["zminus"] = rational(z.zminus);
        return d;
    });
    m.def("ramanujan", [](const TypedComplex& c, double tol) {
        const RamanujanReport r = ramanujan_check(zeta_bundle(c), tol);
        return py::make_tuple(r.ramanujan, r.dvertex.trivial_found);
    }, py::arg("complex"), py::arg("tol") = 1e-6);
    m.def("edge_traces", [](const TypedComplex& c, std::size_t n) {
        py::list out;
        for (const BigInt& t : edge_operator(c).trace_powers(n)) out.append(to_py(t));
        return out;
    });
    m.def("count_galleries", [](const TypedComplex& c, int length) { return count_galleries(c, length); });
    m.def("count_type1_geodesics", [](const TypedComplex& c, int length) { return count_type1_geodesics(c, length); });

    m.def("satake_recursion", [](int q, int order) { return verify_recursion_42(q, order).pass; });
    m.def("sigma3_identity", [](int order) { return verify_sigma3_identity(order).pass; });
    m.def("tamagawa", [](int q, int order, int radius) { return verify_tamagawa(q, order, radius).pass; });
    m.def("geodesic_criterion", [](int q, int length, int radius) {
        const GeodesicReport r = verify_geodesic_criterion(q, length, radius);
        return py::make_tuple(r.pass, r.paths, r.expected);
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, std::vector<std::pair<int, int>> edges) { return Graph{n, std::move(edges)}; }), py::arg("vertex_count"), py::arg("edges"))
        .def_readonly("vertex_count", &Graph::vertex_count)
        .def_readonly("edges", &Graph::edges);
    m.def("petersen_graph", &petersen_graph);
    m.def("complete_graph", &complete_graph);
    m.def("random_regular_graph", &random_regular_graph);
    m.def("ihara_zeta", [](const Graph& g) {
        const IharaReport r = ihara_zeta(g);
        return py::make_tuple(rational(r.hashimoto), r.agree);
    });
    m.def("count_Nn", [](const Graph& g, int n) { return count_Nn(g, n); });
    m.def("graph_ramanujan", [](const Graph& g) { return ramanujan_graph_check(g).ramanujan; });
}
