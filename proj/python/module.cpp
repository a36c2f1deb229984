#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fullerene/io.hpp"
#include "fullerene/pipeline.hpp"

namespace py = pybind11;
using namespace fullerene;

namespace {

py::object to_int(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

py::object loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

py::dict bounds_dict(const LowerBounds& b)
{
    py::dict d;
    d["p"] = b.p;
    d["theorem1_exponent"] = py::make_tuple(b.theorem1_exponent.num, b.theorem1_exponent.den);
    d["theorem1"] = b.theorem1;
    d["zz"] = to_int(b.zz);
    d["km_exponent"] = py::make_tuple(b.km_exponent.num, b.km_exponent.den);
    d["km"] = b.km;
    d["corollary_exponent"] = py::make_tuple(b.corollary_exponent.num, b.corollary_exponent.den);
    d["corollary"] = b.corollary;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Perfect matchings of fullerene graphs";

    py::register_exception<Error>(m, "FullereneError", PyExc_ValueError);

    py::class_<PlanarGraph>(m, "PlanarGraph")
        .def_property_readonly("vertex_count", &PlanarGraph::vertex_count)
        .def_property_readonly("edge_count", &PlanarGraph::edge_count)
        .def_property_readonly("face_count", &PlanarGraph::face_count)
        .def("rotation", &PlanarGraph::rotation_lists, "Clockwise neighbour list of every vertex")
        .def("neighbors", &PlanarGraph::neighbors)
        .def("face_vertices", &PlanarGraph::face_vertices)
        .def("endpoints", &PlanarGraph::endpoints)
        .def("is_planar", &PlanarGraph::is_planar)
        .def("__repr__", [](const PlanarGraph& g) {
            return "<PlanarGraph V=" + std::to_string(g.vertex_count()) + " E=" + std::to_string(g.edge_count()) +
                   " F=" + std::to_string(g.face_count()) + ">";
        });

    py::class_<FullereneGraph>(m, "FullereneGraph")
        .def_property_readonly("p", &FullereneGraph::p)
        .def_property_readonly("graph", &FullereneGraph::graph, py::return_value_policy::reference_internal)
        .def_property_readonly("pentagons", &FullereneGraph::pentagons)
        .def_property_readonly("hexagons", &FullereneGraph::hexagons)
        .def("__repr__", [](const FullereneGraph& g) { return "<FullereneGraph p=" + std::to_string(g.p()) + ">"; });

    m.def("build_from_rotation", &build_from_rotation, py::arg("rotation"));
    m.def("validate_fullerene", &validate_fullerene, py::arg("graph"));
    m.def("dodecahedron", &dodecahedron);
    m.def("leapfrog", &leapfrog, py::arg("graph"));

    m.def("parse_planar_code", [](py::bytes data) {
        const std::string s = data;
        return parse_planar_code(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
    }, py::arg("data"));
    m.def("encode_planar_code", [](const std::vector<PlanarGraph>& graphs, bool header) {
        const auto b = encode_planar_code(graphs, header);
        return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
    }, py::arg("graphs"), py::arg("header") = true);
    m.def("parse_rotation_text", [](const std::string& s) { return parse_rotation_text(s); }, py::arg("text"));
    m.def("emit_rotation_text", &emit_rotation_text, py::arg("graph"));

    m.def("select_witnesses", [](const FullereneGraph& g) {
        const WitnessSet w = select_witnesses(dual(g));
        py::dict d;
        d["witnesses"] = w.witnesses;
        d["certified"] = w.certified();
        d["face_count"] = w.face_count;
        d["lower_bound"] = witness_lower_bound(w.face_count);
        return d;
    }, py::arg("graph"));

    m.def("count_perfect_matchings", [](const PlanarGraph& g) { return to_int(count_perfect_matchings(g)); },
          py::arg("graph"));
    m.def("brute_enumerate", [](const PlanarGraph& g, std::uint64_t cap) {
        std::vector<std::vector<Edge>> out;
        for (auto& pm : brute_enumerate(g, cap)) out.push_back(std::move(pm.edges));
        return out;
    }, py::arg("graph"), py::arg("cap") = 1'000'000);
    m.def("lower_bounds", [](long p) { return bounds_dict(lower_bounds(p)); }, py::arg("p"));

    m.def("analyze", [](const PlanarGraph& g, bool exact_count, std::uint64_t switch_cap, std::uint64_t seed,
                        std::uint64_t node_budget) {
        AnalyzeOptions o{exact_count, switch_cap, seed, node_budget};
        MatchingReport r;
        {
            py::gil_scoped_release release;
            r = analyze(g, o);
        }
        return loads(report_json(r));
    }, py::arg("graph"), py::arg("exact_count") = true, py::arg("switch_cap") = std::uint64_t{1} << 20,
       py::arg("seed") = 0, py::arg("node_budget") = 10'000'000,
       "Full pipeline; returns the report document as a dict");
}
