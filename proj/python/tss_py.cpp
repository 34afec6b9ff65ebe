#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tss/activation.hpp"
#include "tss/bounds.hpp"
#include "tss/cli.hpp"
#include "tss/constructions.hpp"
#include "tss/error.hpp"
#include "tss/families.hpp"
#include "tss/io.hpp"
#include "tss/solver.hpp"
#include "tss/thresholds.hpp"

namespace py = pybind11;
using namespace tss;

namespace {

VertexSet to_set(const Graph& g, const std::vector<VertexId>& ids) { return VertexSet(g.vertex_count(), ids); }

ThresholdAssignment to_theta(const Graph& g, const py::object& theta) {
  if (py::isinstance<py::int_>(theta)) return constant_threshold(g, theta.cast<int>());
  if (py::isinstance<py::str>(theta)) {
    const auto name = theta.cast<std::string>();
    if (name == "majority") return majority_threshold(g);
    if (name == "strict-majority") return strict_majority_threshold(g);
    throw py::value_error("threshold must be an int, a list, 'majority' or 'strict-majority'");
  }
  ThresholdAssignment out(theta.cast<std::vector<int>>());
  out.check_against(g);
  return out;
}

}  // namespace

PYBIND11_MODULE(_tss, m) {
  m.doc() = "Target set selection: graph families, seed constructions, activation and exact search";

  static py::exception<Error> error_type(m, "TssError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::edges)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, VertexId v) {
             const auto span = g.neighbors(v);
             return std::vector<VertexId>(span.begin(), span.end());
           })
      .def("label", &Graph::label)
      .def("find_label", &Graph::find_label)
      .def("is_connected", &Graph::is_connected)
      .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); })
      .def("to_dot", [](const Graph& g) { return to_dot(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::vertex_count);

  m.def("build_graph", [](std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels) {
    return build_graph(n, edges, std::move(labels));
  }, py::arg("n"), py::arg("edges"), py::arg("labels") = std::vector<std::string>{});
  m.def("graph_from_json", [](const std::string& text) { return parse_graph_document(text).graph; });

  m.def("path", &path);
  m.def("cycle", &cycle);
  m.def("cycle_permutation", [](std::size_t n, const std::vector<std::size_t>& images) {
    return cycle_permutation(n, Permutation::from_one_based(images));
  }, py::arg("n"), py::arg("perm"), "perm holds the 1-based images pi(1..n)");
  m.def("generalized_petersen", &generalized_petersen);
  m.def("toroidal_mesh", &toroidal_mesh);
  m.def("torus_cordalis", &torus_cordalis);
  m.def("torus_serpentinus", &torus_serpentinus);

  m.def("closure", [](const Graph& g, const py::object& theta, const std::vector<VertexId>& seed) {
    return closure(g, to_theta(g, theta), to_set(g, seed)).members();
  });
  m.def("is_influencing", [](const Graph& g, const py::object& theta, const std::vector<VertexId>& seed) {
    return is_influencing(g, to_theta(g, theta), to_set(g, seed));
  });
  m.def("parallel_trace", [](const Graph& g, const py::object& theta, const std::vector<VertexId>& seed) {
    return parallel_trace(g, to_theta(g, theta), to_set(g, seed)).rounds;
  }, "rounds of newly active vertices");
  m.def("validate_sequence",
        [](const Graph& g, const py::object& theta, const std::vector<VertexId>& seed,
           const std::vector<VertexId>& order) {
          const auto check = validate_convinced_sequence(g, to_theta(g, theta), to_set(g, seed), {order});
          py::dict out;
          out["ok"] = check.ok;
          out["full_influence"] = check.full_influence;
          out["position"] = check.violation ? py::cast(check.violation->position) : py::none();
          return out;
        });

  py::class_<SeedReport>(m, "SeedReport")
      .def_readonly("graph", &SeedReport::graph)
      .def_readonly("size", &SeedReport::size)
      .def_readonly("lower_bound", &SeedReport::lower_bound)
      .def_readonly("verified", &SeedReport::verified)
      .def_property_readonly("seed", [](const SeedReport& r) { return r.seed.members(); })
      .def_property_readonly("sequence", [](const SeedReport& r) { return r.sequence.order; })
      .def_property_readonly("case", [](const SeedReport& r) { return to_string(r.theorem_case); })
      .def_property_readonly("kind", [](const SeedReport& r) { return to_string(r.claimed); })
      .def("to_json", [](const SeedReport& r) { return seed_report_to_json(r).dump(); });

  m.def("seed_torus_cordalis", [](std::size_t mm, std::size_t n, const std::string& theorem) {
    if (theorem.empty()) return seed_torus_cordalis(mm, n);
    const auto t = parse_cordalis_theorem(theorem);
    if (!t) throw py::value_error("theorem must be one of T5 T6 T7 T8 T9 fallback");
    return seed_torus_cordalis_by(mm, n, *t);
  }, py::arg("m"), py::arg("n"), py::arg("theorem") = "");
  m.def("seed_generalized_petersen", &seed_generalized_petersen);
  m.def("seed_cycle_permutation", [](std::size_t n, const std::vector<std::size_t>& images) {
    return seed_cycle_permutation(n, Permutation::from_one_based(images));
  });
  m.def("applicable_theorems", [](std::size_t mm, std::size_t n) {
    std::vector<std::string> out;
    for (auto t : applicable_theorems(mm, n)) out.push_back(to_string(t));
    return out;
  });

  m.def("lower_bound_lemma", &lower_bound_lemma);
  m.def("tss_lower_bound_torus", &tss_lower_bound_torus);
  m.def("flocchini_upper", [](std::int64_t mm, std::int64_t n, const std::string& variant) {
    if (variant == "cordalis") return flocchini_upper(mm, n, TorusVariant::cordalis);
    if (variant == "mesh") return flocchini_upper(mm, n, TorusVariant::mesh);
    if (variant == "serpentinus") return flocchini_upper(mm, n, TorusVariant::serpentinus);
    throw py::value_error("variant must be cordalis, mesh or serpentinus");
  }, py::arg("m"), py::arg("n"), py::arg("variant") = "cordalis");

  m.def("exact_min_seed",
        [](const Graph& g, const py::object& theta, std::size_t max_vertices, long budget_ms) {
          SolveLimits limits;
          limits.max_vertices = max_vertices;
          limits.time_budget = std::chrono::milliseconds(budget_ms);
          SolveResult r;
          {
            py::gil_scoped_release release;
            r = exact_min_seed(g, to_theta(g, theta), limits);
          }
          py::dict out;
          out["optimum"] = r.optimum;
          out["witness"] = r.witness.members();
          out["status"] = to_string(r.status);
          out["nodes_explored"] = r.nodes_explored;
          return out;
        },
        py::arg("graph"), py::arg("theta"), py::arg("max_vertices") = 24, py::arg("budget_ms") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
