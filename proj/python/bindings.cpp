#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ksplit/bounds.hpp"
#include "ksplit/cli.hpp"
#include "ksplit/constructions.hpp"
#include "ksplit/error.hpp"
#include "ksplit/fields.hpp"
#include "ksplit/freeness.hpp"
#include "ksplit/json_io.hpp"
#include "ksplit/probabilistic.hpp"

namespace py = pybind11;
using namespace ksplit;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Graph make_graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(vertex_count, std::move(edges));
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::object optional_embedding(const std::optional<Embedding>& e) {
  if (!e) return py::none();
  return py::cast(e->mapping);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Splits of complete graphs avoiding a forbidden subgraph";

  // Messages read "Kind: detail".
  py::register_exception<Error>(m, "KsplitError", PyExc_RuntimeError);

  py::class_<Field>(m, "Field")
      .def_static("prime", &Field::prime)
      .def_static("quadratic", &Field::quadratic)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("reduction", [](const Field& f) { return std::make_pair(f.reduction_r0(), f.reduction_r1()); })
      .def("elements", [](const Field& f) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        for (auto e : f.enumerate()) out.emplace_back(e.c0, e.c1);
        return out;
      })
      .def("add", [](const Field& f, std::pair<std::uint32_t, std::uint32_t> a, std::pair<std::uint32_t, std::uint32_t> b) {
        auto r = f.add({a.first, a.second}, {b.first, b.second});
        return std::make_pair(r.c0, r.c1);
      })
      .def("sub", [](const Field& f, std::pair<std::uint32_t, std::uint32_t> a, std::pair<std::uint32_t, std::uint32_t> b) {
        auto r = f.sub({a.first, a.second}, {b.first, b.second});
        return std::make_pair(r.c0, r.c1);
      })
      .def("mul", [](const Field& f, std::pair<std::uint32_t, std::uint32_t> a, std::pair<std::uint32_t, std::uint32_t> b) {
        auto r = f.mul({a.first, a.second}, {b.first, b.second});
        return std::make_pair(r.c0, r.c1);
      })
      .def("invert", [](const Field& f, std::pair<std::uint32_t, std::uint32_t> a) {
        auto r = f.invert({a.first, a.second});
        return std::make_pair(r.c0, r.c1);
      })
      .def("__repr__", &Field::describe);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &edge_list)
      .def("degree", &Graph::degree)
      .def("max_degree", &Graph::max_degree)
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(v=" + std::to_string(g.vertex_count()) + ", e=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<SplitGraph>(m, "SplitGraph")
      .def(py::init<Graph, std::vector<BlobId>, std::size_t, std::size_t>(), py::arg("graph"), py::arg("blob_of"),
           py::arg("n"), py::arg("k"))
      .def_property_readonly("graph", &SplitGraph::graph)
      .def_property_readonly("n", &SplitGraph::n)
      .def_property_readonly("k", &SplitGraph::k)
      .def_property_readonly("blob_of", [](const SplitGraph& s) {
        return std::vector<BlobId>(s.blob_of().begin(), s.blob_of().end());
      })
      .def("blobs", &SplitGraph::blobs)
      .def("to_text", [](const SplitGraph& s) {
        std::ostringstream out;
        write_split(s, out);
        return out.str();
      })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream in(text);
        return read_split(in);
      })
      .def("__eq__", [](const SplitGraph& a, const SplitGraph& b) { return a == b; })
      .def("__repr__", [](const SplitGraph& s) {
        return "SplitGraph(n=" + std::to_string(s.n()) + ", k=" + std::to_string(s.k()) +
               ", v=" + std::to_string(s.graph().vertex_count()) + ")";
      });

  py::class_<ForbiddenGraph>(m, "ForbiddenGraph")
      .def_static("parse", &parse_forbidden_spec)
      .def_readonly("descriptor", &ForbiddenGraph::descriptor)
      .def_readonly("graph", &ForbiddenGraph::graph)
      .def("__repr__", [](const ForbiddenGraph& h) { return "ForbiddenGraph(" + h.descriptor + ")"; });

  m.def("write_split_file", &write_split_file);
  m.def("read_split_file", &read_split_file);
  m.def("read_graph_file", &read_any_graph_file);

  m.def("verify_split", [](const SplitGraph& s, const std::string& mode) {
    return to_python(to_json(verify_split(s, parse_split_mode(mode))));
  }, py::arg("split"), py::arg("mode") = "strict");
  m.def("prune_to_split", &prune_to_split);
  m.def("restrict_blobs", &restrict_blobs);
  m.def("contract_blobs", &contract_blobs);

  m.def("contains_subgraph", [](const Graph& g, const ForbiddenGraph& h) {
    return optional_embedding(contains_subgraph(g, h));
  });
  m.def("find_forbidden", [](const Graph& g, const ForbiddenGraph& h) { return optional_embedding(find_forbidden(g, h)); });
  m.def("is_c4_free", [](const Graph& g) { return !is_c4_free(g).has_value(); });
  m.def("is_kst_free", [](const Graph& g, std::size_t s, std::size_t t) { return !is_kst_free(g, s, t).has_value(); });

  m.def("next_prime", [](std::uint64_t k) { return next_prime(k).p; });
  m.def("build_affine_split", &build_affine_split);
  m.def("construct_c4_free_split", &construct_c4_free_split);
  m.def("build_bipartite_split", &build_bipartite_split);
  m.def("build_star_free_split", &build_star_free_split);
  m.def("star_split_k", &star_split_k);
  m.def("split_from_coloring", [](std::size_t n, std::size_t colors,
                                  const std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>& pairs) {
    EdgeColoring c(n, colors);
    for (auto [i, j, color] : pairs) c.set(i, j, color);
    return build_split_from_coloring(c);
  }, py::arg("n"), py::arg("colors"), py::arg("pairs"));

  m.def("janson_diagnostics", [](const Graph& g, std::size_t n) { return to_python(to_json(janson_diagnostics(g, n))); });
  m.def("concentration_report", [](std::size_t N, std::size_t n) { return to_python(to_json(concentration_report(N, n))); });
  m.def("estimate_pair_failure", [](const Graph& g, std::size_t n, std::size_t samples, std::uint64_t seed, unsigned threads) {
    return to_python(to_json(estimate_pair_failure(g, n, samples, seed, threads)));
  }, py::arg("host"), py::arg("n"), py::arg("samples"), py::arg("seed") = 0, py::arg("threads") = 1);
  m.def("random_split", [](const Graph& g, std::size_t n, std::size_t k_cap, std::size_t trials, std::uint64_t seed,
                           unsigned threads) -> py::object {
    auto r = random_split(g, n, k_cap, trials, seed, threads);
    if (auto* ok = std::get_if<RandomSplitSuccess>(&r)) return py::make_tuple(ok->split, ok->trial);
    return to_python(to_json(std::get<FailureStats>(r)));
  }, py::arg("host"), py::arg("n"), py::arg("k_cap"), py::arg("trials"), py::arg("seed") = 0, py::arg("threads") = 1);
  m.def("trim_max_degree", [](const Graph& g, double b, double c_prime, std::optional<std::size_t> q,
                              std::optional<double> ex) {
    TrimOptions options;
    options.forced_q = q;
    options.ex = ex;
    auto r = trim_max_degree(g, TuranProfile::single(b, 1.0, c_prime), options);
    return py::make_tuple(to_python(to_json(r)), r.trimmed ? py::cast(*r.trimmed) : py::none());
  }, py::arg("graph"), py::arg("b") = 1.5, py::arg("c_prime") = 1.0, py::arg("q") = py::none(), py::arg("ex") = py::none());

  m.def("turan_bound", [](const ForbiddenGraph& h, std::uint64_t ell) { return to_python(to_json(turan_bound(h, ell))); });
  m.def("necessary_k_lower", &necessary_k_lower);
  m.def("split_bounds", [](const ForbiddenGraph& h, std::uint64_t n, bool certify) {
    return to_python(to_json(split_bounds(h, n, {certify})));
  }, py::arg("forbidden"), py::arg("n"), py::arg("certify") = false);
  m.def("ramsey_bounds", [](std::uint64_t t, std::uint64_t k) { return to_python(to_json(ramsey_bounds(t, k))); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
