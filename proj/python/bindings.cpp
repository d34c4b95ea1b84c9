// Python module: graphs are a bound class, everything else travels as the
// same JSON-shaped dicts the CLI writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "itw/cli.hpp"
#include "itw/constructions.hpp"
#include "itw/decomp.hpp"
#include "itw/dedensify.hpp"
#include "itw/error.hpp"
#include "itw/graph_io.hpp"
#include "itw/minor.hpp"
#include "itw/trim.hpp"
#include "itw/wall.hpp"
#include "itw/width.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace itw;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::handle& o) { return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

py::object search_result(SearchStatus status, std::uint64_t nodes, const json& found) {
  json out{{"status", to_string(status)}, {"nodes", nodes}};
  out["model"] = found;
  return to_py(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Induced minors, walls, sparse treewidth witnesses";
  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<Refusal>(m, "Refusal", PyExc_RuntimeError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);
  (void)input_error;

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
             return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", [](const Graph& g) { return std::vector<std::pair<Vertex, Vertex>>(g.edges().begin(), g.edges().end()); })
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (!g.contains(v)) throw InputError("no vertex " + std::to_string(v));
        auto s = g.neighbors(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("adjacent", &Graph::adjacent)
      .def("to_graph6", &to_graph6)
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("to_dict", [](const Graph& g) { return to_py(to_json(g)); })
      .def_static("from_dict", [](py::object o) { return graph_from_json(from_py(o)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("grid", [](int k) { return grid(k).graph; });
  m.def("wall", [](int k) { return wall(k).graph; });
  m.def("complete_graph", &complete_graph);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def(
      "subdivide",
      [](const Graph& g, int length, bool at_least, std::uint64_t seed, int max_extra) {
        return subdivide(g, length, at_least ? LengthMode::at_least : LengthMode::exact, seed, max_extra).graph;
      },
      py::arg("g"), py::arg("length"), py::arg("at_least") = false, py::arg("seed") = 0, py::arg("max_extra") = 0);

  m.def(
      "exact_treewidth",
      [](const Graph& g, std::size_t cap) {
        auto r = exact_treewidth(g, cap);
        return to_py({{"width", r.width}, {"td", to_json(r.decomposition)}});
      },
      py::arg("g"), py::arg("cap") = 24);
  m.def("validate_tree_decomposition", [](const Graph& g, py::object td) {
    auto r = validate_tree_decomposition(g, tree_decomposition_from_json(from_py(td)));
    return to_py({{"ok", r.ok}, {"width", r.width}, {"adhesion", r.adhesion_size}, {"violations", r.violations}});
  });
  m.def("bramble_order", [](const Graph& g, std::vector<VertexSet> sets) {
    Bramble b{std::move(sets)};
    if (auto e = validate_bramble(g, b); !e.empty()) throw InputError(e);
    auto h = bramble_order(g, b);
    return to_py({{"order", h.order}, {"hitting_set", h.set}});
  });

  m.def(
      "find_induced_minor",
      [](const Graph& host, const Graph& pattern, bool induced, std::uint64_t budget, std::size_t host_cap) {
        InducedMinorOptions o;
        o.induced = induced;
        o.budget = budget;
        o.host_cap = host_cap;
        auto r = find_induced_minor(host, pattern, o);
        return search_result(r.status, r.nodes, r.model ? to_json(*r.model) : json(nullptr));
      },
      py::arg("host"), py::arg("pattern"), py::arg("induced") = true, py::arg("budget") = 50'000'000,
      py::arg("host_cap") = 18);
  m.def("validate_model", [](const Graph& host, py::object model) { return validate_model(host, minor_model_from_json(from_py(model))); });
  m.def("grid_to_wall_model", [](int k) { return to_py(to_json(grid_to_wall_model(k))); });
  m.def("wall_to_grid_model", [](int k) { return to_py(to_json(wall_to_grid_model(k))); });

  m.def("extract_wall", [](const Graph& host, py::object model) {
    auto r = extract_wall_quasi_subdivision(host, minor_model_from_json(from_py(model)));
    return to_py(to_json(r.witness));
  });
  m.def("validate_wall_witness", [](const Graph& host, py::object w) { return validate_wall_witness(host, wall_witness_from_json(from_py(w))); });
  m.def("thin_to_sparse_wall", [](const Graph& host, py::object witness, int w, const std::string& eps) {
    auto s = thin_to_sparse_wall(host, wall_witness_from_json(from_py(witness)), w, Rational::parse(eps));
    return to_py({{"vertices", s.vertices}, {"model", to_json(s.model)}, {"edge_count", s.edge_count}, {"spacing", s.spacing}});
  });

  m.def(
      "random_trim_supergraph",
      [](const std::string& kind, int side, int length, std::size_t extra, std::uint64_t seed, int max_extra) {
        return to_py(to_json(random_trim_supergraph(parse_skeleton_kind(kind), side, length, extra, seed, max_extra)));
      },
      py::arg("kind"), py::arg("side"), py::arg("length"), py::arg("extra"), py::arg("seed"), py::arg("max_extra") = 0);
  m.def("validate_trim", [](py::object t) {
    auto r = validate_trim(trim_from_json(from_py(t)));
    return r.extra_edge_count;
  });
  m.def(
      "dedensify",
      [](py::object trim, int h, bool exhaustive, std::uint64_t seed, std::size_t draws, std::uint64_t budget, int jobs) {
        auto r = dedensify_balanced(trim_from_json(from_py(trim)), h,
                                    {.exhaustive = exhaustive, .seed = seed, .draws = draws, .budget = budget, .jobs = jobs});
        json out{{"cell", to_json(r.graph)}, {"origin", r.graph.origin}, {"i", r.i}, {"j", r.j},
                 {"partition_a", r.partition.a}, {"partition_b", r.partition.b}, {"extras", r.extras},
                 {"input_vertices", r.input_vertices}, {"input_extras", r.input_extras},
                 {"partitions_examined", r.partitions_examined}, {"qualifying", r.qualifying}};
        return to_py(out);
      },
      py::arg("trim"), py::arg("h"), py::arg("exhaustive") = false, py::arg("seed") = 0, py::arg("draws") = 200,
      py::arg("budget") = 1'000'000, py::arg("jobs") = 1);
  m.def(
      "assemble_sparse_witness",
      [](py::object trim, int w, const std::string& eps, std::uint64_t seed, std::optional<std::string> d) {
        std::optional<Rational> dr;
        if (d) dr = Rational::parse(*d);
        auto run = assemble_sparse_witness(trim_from_json(from_py(trim)), w, Rational::parse(eps), seed, dr);
        auto out = to_json(run.certificate);
        out["h"] = run.h;
        out["d"] = to_json(run.d);
        return to_py(out);
      },
      py::arg("trim"), py::arg("w"), py::arg("eps"), py::arg("seed"), py::arg("d") = std::nullopt);
  m.def("check_sparse_witness", [](const Graph& host, py::object cert) {
    auto c = sparse_witness_from_json(from_py(cert));
    check_sparse_witness(host, c);
    return to_py(to_json(c));
  });

  m.def("build_gx", [](const Graph& g, py::object td, int node) {
    return to_py(to_json(build_gx(g, tree_decomposition_from_json(from_py(td)), node)));
  });
  m.def("build_torso", [](const Graph& g, py::object td, int node) {
    return to_py(to_json(build_torso(g, tree_decomposition_from_json(from_py(td)), node)));
  });
  m.def("project_bramble", [](const Graph& g, py::object td, std::vector<VertexSet> sets, int h, int p) {
    Bramble b{std::move(sets)};
    auto pb = project_bramble(g, tree_decomposition_from_json(from_py(td)), b, h, p);
    auto lifted = lift_hitting_set(pb, b, pb.projected_order.set);
    return to_py({{"node", pb.node},
                  {"gx", to_json(pb.gx)},
                  {"projected", pb.projected.sets},
                  {"input_order", pb.input_order.order},
                  {"projected_order", pb.projected_order.order},
                  {"hitting_set", pb.projected_order.set},
                  {"lifted", lifted}});
  });

  m.def("run_cli", [](std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
  m.attr("__version__") = "0.1.0";
}
