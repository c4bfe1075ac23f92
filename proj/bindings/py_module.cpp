// Python bindings for the core operations: tournaments, intervals,
// criticality, families, isomorphism, census and the verification suites.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tcrit/census.hpp"
#include "tcrit/criticality.hpp"
#include "tcrit/er_partition.hpp"
#include "tcrit/families.hpp"
#include "tcrit/intervals.hpp"
#include "tcrit/isomorphism.hpp"
#include "tcrit/verify.hpp"

namespace py = pybind11;
using namespace tcrit;

namespace {

std::vector<int> set_members(VertexSet s) { return s.to_vector(); }

VertexSet set_from_list(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
}

}  // namespace

PYBIND11_MODULE(_tcrit, m) {
    m.doc() = "tournament interval/criticality toolkit";

    py::register_exception<Error>(m, "TcritError");

    py::class_<VertexSet>(m, "VertexSet")
        .def(py::init(&set_from_list), py::arg("members") = std::vector<int>{})
        .def_static("full", &VertexSet::full)
        .def("members", &set_members)
        .def("contains", &VertexSet::contains)
        .def("__len__", [](VertexSet s) { return s.size(); })
        .def("__or__", [](VertexSet a, VertexSet b) { return a | b; })
        .def("__and__", [](VertexSet a, VertexSet b) { return a & b; })
        .def("__sub__", [](VertexSet a, VertexSet b) { return a - b; })
        .def(py::self == py::self)
        .def("__repr__", [](VertexSet s) {
            std::string out = "VertexSet([";
            bool first = true;
            for (int v : s) {
                if (!first) out += ", ";
                out += std::to_string(v);
                first = false;
            }
            return out + "])";
        });

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>())
        .def_static("identity", &Permutation::identity)
        .def("image", &Permutation::image)
        .def("inverse", &Permutation::inverse)
        .def("__call__", [](const Permutation& p, int i) { return p(i); })
        .def("__len__", &Permutation::size)
        .def(py::self == py::self);
    m.def("compose", &compose, "compose(p, q)(i) = p(q(i))");

    py::class_<Tournament>(m, "Tournament")
        .def_static("from_matrix", &Tournament::from_matrix)
        .def_static("from_arcs", &Tournament::from_arcs)
        .def_property_readonly("order", &Tournament::order)
        .def("arc", &Tournament::arc)
        .def("out_set", &Tournament::out_set)
        .def("in_set", &Tournament::in_set)
        .def("dual", &Tournament::dual)
        .def("induced", &Tournament::induced)
        .def("relabeled", &Tournament::relabeled)
        .def(py::self == py::self)
        .def("__repr__", [](const Tournament& t) {
            return "Tournament(order=" + std::to_string(t.order()) + ")";
        });

    m.def("to_trn", &to_trn);
    m.def("parse_trn", [](const std::string& text) { return parse_trn(text); });
    m.def("read_trn_file", &read_trn_file);
    m.def("write_trn_file", &write_trn_file);
    m.def("tournament_dot", [](const Tournament& t) { return to_dot(t); });

    m.def("arcs_equivalent", &arcs_equivalent);
    m.def("is_interval", &is_interval);
    m.def("is_interval_within", &is_interval_within);
    m.def("interval_closure", &interval_closure);
    m.def("find_nontrivial_interval", &find_nontrivial_interval);
    m.def("is_indecomposable", &is_indecomposable);
    m.def("is_indecomposable_within", &is_indecomposable_within);
    m.def("enumerate_intervals", &enumerate_intervals);

    py::class_<ErPartition>(m, "ErPartition")
        .def_readonly("bracket", &ErPartition::bracket)
        .def_readonly("ext", &ErPartition::ext)
        .def_readonly("attached", &ErPartition::attached);
    m.def("compute_partition", &compute_partition);
    m.def("find_indecomposable_extension_pair", &find_indecomposable_extension_pair);

    py::enum_<ComponentShape>(m, "ComponentShape")
        .value("isolated", ComponentShape::isolated)
        .value("path", ComponentShape::path)
        .value("cycle", ComponentShape::cycle)
        .value("other", ComponentShape::other);

    py::class_<Component>(m, "Component")
        .def_readonly("vertices", &Component::vertices)
        .def_readonly("shape", &Component::shape);

    py::class_<IndecomposabilityGraph>(m, "IndecomposabilityGraph")
        .def_readonly("n", &IndecomposabilityGraph::n)
        .def("has_edge", &IndecomposabilityGraph::has_edge)
        .def("degree", &IndecomposabilityGraph::degree)
        .def("neighbors", &IndecomposabilityGraph::neighbors)
        .def("edges", &IndecomposabilityGraph::edge_list)
        .def(py::self == py::self);

    py::class_<CriticalityReport>(m, "CriticalityReport")
        .def_readonly("order", &CriticalityReport::order)
        .def_readonly("critical", &CriticalityReport::critical)
        .def_readonly("non_critical", &CriticalityReport::non_critical)
        .def_readonly("k", &CriticalityReport::non_critical_count)
        .def_readonly("small_order", &CriticalityReport::small_order)
        .def_readonly("graph", &CriticalityReport::graph)
        .def_readonly("components", &CriticalityReport::components);

    m.def("critical_vertices", &critical_vertices);
    m.def("indecomposability_graph", &indecomposability_graph);
    m.def("component_shapes", &component_shapes);
    m.def("classify", &classify);
    m.def("graph_dot", [](const IndecomposabilityGraph& g, VertexSet tagged) { return to_dot(g, tagged); },
          py::arg("graph"), py::arg("tagged") = VertexSet{});

    py::enum_<Family>(m, "Family")
        .value("L", Family::L)
        .value("T", Family::T)
        .value("U", Family::U)
        .value("V", Family::V)
        .value("E", Family::E)
        .value("F", Family::F)
        .value("Fdual", Family::Fdual)
        .value("G", Family::G)
        .value("Gdual", Family::Gdual)
        .value("H", Family::H);

    py::class_<FamilyMember>(m, "FamilyMember")
        .def_readonly("family", &FamilyMember::family)
        .def_readonly("n", &FamilyMember::n)
        .def_readonly("k", &FamilyMember::k)
        .def_readonly("tournament", &FamilyMember::tournament)
        .def("name", &FamilyMember::name);

    m.def("chain", &chain);
    m.def("t_tournament", &t_tournament);
    m.def("u_tournament", &u_tournament);
    m.def("v_tournament", &v_tournament);
    m.def("e_tournament", &e_tournament);
    m.def("f_tournament", &f_tournament);
    m.def("g_tournament", &g_tournament);
    m.def("h_tournament", &h_tournament);
    m.def("make_family", &make_family, py::arg("family"), py::arg("n"), py::arg("k") = 0);
    m.def("dual_isomorphism", &dual_isomorphism);
    m.def("minus_one_critical_members", &minus_one_critical_members);

    m.def("find_isomorphism", &find_isomorphism);
    m.def("canonical_form", [](const Tournament& t) { return py::bytes(canonical_form(t)); });
    m.def("canonical_hex", [](const Tournament& t) { return to_hex(canonical_form(t)); });

    py::class_<CensusOptions>(m, "CensusOptions")
        .def(py::init<>())
        .def_readwrite("jobs", &CensusOptions::jobs)
        .def_readwrite("collect_classes", &CensusOptions::collect_classes);

    py::class_<CensusClass>(m, "CensusClass")
        .def_readonly("k", &CensusClass::k)
        .def_property_readonly("canonical", [](const CensusClass& c) { return py::bytes(c.key); })
        .def_property_readonly("canonical_hex", [](const CensusClass& c) { return to_hex(c.key); })
        .def_readonly("labeled", &CensusClass::labeled)
        .def_readonly("representative", &CensusClass::representative);

    py::class_<CensusResult>(m, "CensusResult")
        .def_readonly("order", &CensusResult::order)
        .def_readonly("labeled", &CensusResult::labeled)
        .def_readonly("indecomposable", &CensusResult::indecomposable)
        .def_readonly("histogram", &CensusResult::histogram)
        .def_readonly("classes", &CensusResult::classes);

    m.def("labeled_count", &labeled_count);
    m.def("tournament_from_code", &tournament_from_code);
    m.def("run_census", &run_census, py::arg("m"), py::arg("options") = CensusOptions{},
          py::call_guard<py::gil_scoped_release>());
    m.def("census_summary", &census_summary);
    m.def("census_json", &census_json);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("suite", &VerifyReport::suite)
        .def_readonly("ok", &VerifyReport::ok)
        .def_readonly("lines", &VerifyReport::lines);

    m.def("verify_minus_one_characterization", &verify_minus_one_characterization, py::arg("n"),
          py::arg("options") = CensusOptions{}, py::call_guard<py::gil_scoped_release>());
    m.def("verify_critical_characterization", &verify_critical_characterization, py::arg("n"),
          py::arg("options") = CensusOptions{}, py::call_guard<py::gil_scoped_release>());
    m.def("verify_indecomposability_graphs", &verify_indecomposability_graphs);
    m.def("verify_structural_lemmas", &verify_structural_lemmas);
}
