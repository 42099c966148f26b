#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kcbg/connectivity.hpp"
#include "kcbg/constructions.hpp"
#include "kcbg/criticality.hpp"
#include "kcbg/fixtures.hpp"
#include "kcbg/matching.hpp"
#include "kcbg/numeric.hpp"
#include "kcbg/sweep.hpp"

namespace py = pybind11;

namespace {

kcbg::VertexRef vertex_ref(const std::pair<std::string, int>& v) {
    if (v.first == "u" || v.first == "U") return {kcbg::Side::U, v.second};
    if (v.first == "v" || v.first == "V") return {kcbg::Side::V, v.second};
    kcbg::fail(kcbg::errc::parse_error, "vertex side must be 'u' or 'v'");
}

py::object witness_to_py(const kcbg::VerifyReport& r) {
    if (!r.witness) return py::none();
    py::dict w;
    if (const auto* s = std::get_if<kcbg::FaultSetWitness>(&*r.witness)) {
        w["kind"] = "fault_set_U";
        w["vertices"] = s->u_vertices;
    } else {
        const auto& h = std::get<kcbg::HallWitness>(*r.witness);
        w["kind"] = "hall_violator_V";
        w["vertices"] = h.v_vertices;
    }
    return w;
}

py::dict report_to_dict(const kcbg::VerifyReport& r) {
    py::dict d;
    d["verdict"] = r.verdict;
    d["method"] = kcbg::method_name(r.method);
    d["witness"] = witness_to_py(r);
    d["work"] = r.work;
    d["wall_ms"] = r.wall_ms;
    return d;
}

py::dict stats_to_dict(const kcbg::DegreeStats& s) {
    py::dict d;
    d["delta_U"] = s.delta_U;
    d["Delta_U"] = s.Delta_U;
    d["delta_V"] = s.delta_V;
    d["Delta_V"] = s.Delta_V;
    d["edge_count"] = s.edge_count;
    return d;
}

kcbg::Budget make_budget(long long subsets, bool force) {
    kcbg::Budget b;
    b.subsets = subsets;
    b.force = force;
    return b;
}

}  // namespace

PYBIND11_MODULE(_kcbg, m) {
    m.doc() = "k-critical-bipartite graph toolkit";

    py::register_exception<kcbg::Error>(m, "KcbgError");

    py::class_<kcbg::BipartiteGraph>(m, "BipartiteGraph")
        .def(py::init<int, int, std::vector<kcbg::Edge>, bool>(), py::arg("n"), py::arg("m"),
             py::arg("edges"), py::arg("lenient") = false)
        .def_property_readonly("n", &kcbg::BipartiteGraph::n)
        .def_property_readonly("m", &kcbg::BipartiteGraph::m)
        .def_property_readonly("edge_count", &kcbg::BipartiteGraph::edge_count)
        .def("edges", &kcbg::BipartiteGraph::edges)
        .def("neighbors_of_u", &kcbg::BipartiteGraph::neighbors_of_u)
        .def("neighbors_of_v", &kcbg::BipartiteGraph::neighbors_of_v)
        .def("has_edge", &kcbg::BipartiteGraph::has_edge)
        .def("__eq__", [](const kcbg::BipartiteGraph& a, const kcbg::BipartiteGraph& b) { return a == b; })
        .def("__repr__", [](const kcbg::BipartiteGraph& g) {
            return "BipartiteGraph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<kcbg::Matching>(m, "Matching")
        .def_readonly("pairs", &kcbg::Matching::pairs)
        .def_property_readonly("size", &kcbg::Matching::size);

    py::class_<kcbg::Digraph>(m, "Digraph")
        .def_readonly("order", &kcbg::Digraph::order)
        .def_readonly("arcs", &kcbg::Digraph::arcs)
        .def_readonly("contracted_from", &kcbg::Digraph::contracted_from);

    py::class_<kcbg::DegreeProfile>(m, "DegreeProfile")
        .def_readonly("x", &kcbg::DegreeProfile::x)
        .def_readonly("y", &kcbg::DegreeProfile::y)
        .def_readonly("b", &kcbg::DegreeProfile::b)
        .def_readonly("l", &kcbg::DegreeProfile::l)
        .def_readonly("P", &kcbg::DegreeProfile::P)
        .def_readonly("Q", &kcbg::DegreeProfile::Q)
        .def_readonly("D", &kcbg::DegreeProfile::D);

    m.def("degree_stats",
          [](const kcbg::BipartiteGraph& g) { return stats_to_dict(kcbg::degree_stats(g)); });
    m.def("build_tilde", &kcbg::build_tilde);
    m.def("component_count", [](const kcbg::BipartiteGraph& g) {
        kcbg::Components c = kcbg::component_count(g);
        return py::make_tuple(c.count, c.label_u, c.label_v);
    });
    m.def("is_subgraph", &kcbg::is_subgraph);
    m.def(
        "serialize",
        [](const kcbg::BipartiteGraph& g, const std::string& format) {
            return kcbg::serialize(g, kcbg::format_from_string(format));
        },
        py::arg("graph"), py::arg("format") = "edgelist");
    m.def(
        "parse",
        [](const std::string& text, const std::string& format, bool lenient) {
            return kcbg::parse(text, kcbg::format_from_string(format), lenient);
        },
        py::arg("text"), py::arg("format") = "edgelist", py::arg("lenient") = false);

    m.def("hat_g", &kcbg::hat_g, py::arg("n"), py::arg("m"), py::arg("a"));
    m.def("bar_g", &kcbg::bar_g, py::arg("n"), py::arg("m"));
    m.def("check_g", &kcbg::check_g, py::arg("n"), py::arg("m"));
    m.def("dot_g", &kcbg::dot_g, py::arg("x"), py::arg("y"), py::arg("b"));
    m.def("ddot_g", &kcbg::ddot_g, py::arg("x"), py::arg("y"), py::arg("b"));
    m.def("tripledot_g", &kcbg::tripledot_g, py::arg("n"), py::arg("m"), py::arg("c"));
    m.def("star_g", &kcbg::star_g, py::arg("n"), py::arg("m"));
    m.def("kappa_tuned_g", &kcbg::kappa_tuned_g, py::arg("n"), py::arg("m"), py::arg("kappa"));
    m.def("complete_g", &kcbg::complete_g, py::arg("n"), py::arg("m"));

    m.def("count_solutions", &kcbg::count_solutions, py::arg("n"), py::arg("m"), py::arg("j"));
    m.def("max_solution_index", &kcbg::max_solution_index, py::arg("n"), py::arg("m"),
          py::arg("j"));
    m.def("degree_profile", &kcbg::degree_profile, py::arg("x"), py::arg("y"), py::arg("b"));
    m.def("is_bigraphic", [](const std::vector<int>& P, const std::vector<int>& Q) {
        kcbg::BigraphicResult r = kcbg::is_bigraphic(P, Q);
        return py::make_tuple(r.bigraphic, r.realization);
    });

    m.def("max_matching", &kcbg::max_matching);
    m.def("has_complete_matching", &kcbg::has_complete_matching);

    m.def(
        "is_kcb_bruteforce",
        [](const kcbg::BipartiteGraph& g, long long budget, bool force) {
            return report_to_dict(kcbg::is_kcb_bruteforce(g, make_budget(budget, force)));
        },
        py::arg("graph"), py::arg("budget") = 0, py::arg("force") = false);
    m.def(
        "is_kcb_hall",
        [](const kcbg::BipartiteGraph& g, long long budget, bool force) {
            return report_to_dict(kcbg::is_kcb_hall(g, make_budget(budget, force)));
        },
        py::arg("graph"), py::arg("budget") = 0, py::arg("force") = false);
    m.def("is_kcb_fast", [](const kcbg::BipartiteGraph& g) {
        return report_to_dict(kcbg::is_kcb_fast(g));
    });
    m.def(
        "is_k_extendable",
        [](const kcbg::BipartiteGraph& g, int k, long long budget, bool force) {
            return kcbg::is_k_extendable(g, k, make_budget(budget, force));
        },
        py::arg("graph"), py::arg("k"), py::arg("budget") = 0, py::arg("force") = false);
    m.def("find_hall_violator", &kcbg::find_hall_violator);
    m.def("is_minimum_kcb", [](const kcbg::BipartiteGraph& g) {
        kcbg::MinimumCheck c = kcbg::is_minimum_kcb(g);
        py::dict d;
        d["minimum"] = c.minimum;
        d["kcb"] = c.kcb;
        d["stats"] = stats_to_dict(c.stats);
        return d;
    });
    m.def("is_edge_minimal_kcb", &kcbg::is_edge_minimal_kcb);

    m.def("local_connectivity",
          [](const kcbg::BipartiteGraph& g, const std::pair<std::string, int>& x,
             const std::pair<std::string, int>& y) {
              return kcbg::local_connectivity(g, vertex_ref(x), vertex_ref(y));
          });
    m.def("kappa_set", [](const kcbg::BipartiteGraph& g,
                          const std::vector<std::pair<std::string, int>>& S) {
        std::vector<kcbg::VertexRef> refs;
        for (const auto& v : S) refs.push_back(vertex_ref(v));
        return kcbg::kappa_set(g, refs);
    });
    m.def("kappa", &kcbg::kappa);
    m.def("contract_matching", &kcbg::contract_matching);
    m.def("strongly_k_connected", [](int order, const std::vector<std::pair<int, int>>& arcs,
                                     int k) {
        return kcbg::strongly_k_connected(kcbg::make_digraph(order, arcs), k);
    });
    m.def("check_connectivity_bounds", [](const kcbg::BipartiteGraph& g) {
        kcbg::ConnectivityReport r = kcbg::check_connectivity_bounds(g);
        py::dict d;
        d["kappa"] = r.kappa;
        d["kappa_U"] = r.kappa_U;
        d["kappa_V"] = r.kappa_V;
        d["degrees"] = stats_to_dict(r.degrees);
        d["components"] = r.components;
        d["kappa_V_ge_k"] = r.kappaV_bound_ok;
        d["kappa_U_ge_min_deltaU_k"] = r.kappaU_bound_ok;
        d["kappa_ge_min_delta_k"] = r.kappa_bound_ok;
        d["small_separator_isolates_u"] =
            r.small_separator_isolates_u ? py::cast(*r.small_separator_isolates_u) : py::none();
        return d;
    });

    m.def("reference_fixtures", [] {
        py::list out;
        for (const kcbg::Fixture& f : kcbg::reference_fixtures()) {
            out.append(py::make_tuple(f.name, f.graph));
        }
        return out;
    });
    m.def("write_fixtures", &kcbg::write_fixtures, py::arg("dir"));

    m.def(
        "sweep_csv",
        [](int n_min, int n_max, const std::vector<std::string>& families, int jobs) {
            kcbg::SweepOptions options;
            options.n_min = n_min;
            options.n_max = n_max;
            options.jobs = jobs;
            options.families.clear();
            for (const std::string& f : families) {
                options.families.push_back(kcbg::family_from_string(f));
            }
            return kcbg::sweep_csv(kcbg::run_sweep(options));
        },
        py::arg("n_min"), py::arg("n_max"), py::arg("families"), py::arg("jobs") = 1);
}
