#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "avgdeg/errors.hpp"
#include "avgdeg/harness.hpp"

namespace py = pybind11;
using namespace avgdeg;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::str(to_string(r)));
}

py::dict counts_dict(const QueryCounts& c) {
  py::dict d;
  d["vertex"] = c.vertex_queries;
  d["degree"] = c.degree_queries;
  d["neighbor"] = c.neighbor_queries;
  d["total"] = c.total();
  return d;
}

EstimatorConfig make_config(double c, std::uint32_t max_iterations, std::uint64_t max_samples) {
  EstimatorConfig cfg;
  cfg.c = c;
  cfg.max_iterations = max_iterations;
  cfg.max_samples = max_samples;
  return cfg;
}

py::dict certificate_dict(const Certificate& cert) {
  py::dict d;
  d["n"] = cert.n;
  d["m"] = cert.m;
  d["d"] = fraction(cert.d);
  d["alpha"] = cert.alpha;
  d["alpha_provenance"] = cert.alpha_provenance;
  return d;
}

}  // namespace

PYBIND11_MODULE(_avgdeg, m) {
  m.doc() = "Sublinear average-degree estimation on simple graphs.";

  py::register_exception<InvalidState>(m, "InvalidState", PyExc_RuntimeError);
  py::register_exception<NoNeighborError>(m, "NoNeighborError", PyExc_RuntimeError);
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", PyExc_RuntimeError);
  py::register_exception<LoadError>(m, "LoadError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def("degree", [](const Graph& g, VertexId v) {
        if (v >= g.num_vertices()) throw py::index_error("vertex out of range");
        return g.degree(v);
      })
      .def("neighbors", [](const Graph& g, VertexId v) {
        if (v >= g.num_vertices()) throw py::index_error("vertex out of range");
        auto nb = g.neighbors(v);
        return std::vector<VertexId>(nb.begin(), nb.end());
      })
      .def("edges", &Graph::edges)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("precedes", &precedes, py::arg("u"), py::arg("v"), py::arg("graph"));
  m.def("out_degrees", [](const Graph& g) {
    const Orientation o(g);
    std::vector<Degree> out(g.num_vertices());
    for (VertexId u = 0; u < out.size(); ++u) out[u] = o.out_degree(u);
    return out;
  });
  m.def("cn_sum", &cn_sum);
  m.def("degeneracy", &degeneracy);
  m.def("exact_arboricity", &exact_arboricity, py::arg("graph"), py::arg("max_n") = kDefaultMaxExactN);
  m.def("forest_decomposition", [](const Graph& g) {
    const ForestDecomposition fd = forest_decomposition(g);
    std::vector<std::tuple<VertexId, VertexId, std::uint32_t>> edges;
    for (const auto& e : fd.edges) edges.emplace_back(e.from, e.to, e.label);
    return py::make_tuple(fd.num_labels, edges);
  });

  py::class_<OracleSession>(m, "OracleSession")
      .def(py::init<const Graph&, std::uint64_t>(), py::arg("graph"), py::arg("seed"),
           py::keep_alive<1, 2>())
      .def("random_vertex", &OracleSession::random_vertex)
      .def("degree", &OracleSession::degree)
      .def("random_neighbor", &OracleSession::random_neighbor)
      .def("query_count", [](const OracleSession& s) { return counts_dict(s.query_count()); });

  py::class_<EstimateReport>(m, "EstimateReport")
      .def_readonly("estimate", &EstimateReport::estimate)
      .def_readonly("terminated", &EstimateReport::terminated)
      .def_readonly("iterations", &EstimateReport::iterations)
      .def_readonly("final_s", &EstimateReport::final_s)
      .def_property_readonly("final_tau", [](const EstimateReport& r) { return fraction(r.final_tau); })
      .def_readonly("samples_total", &EstimateReport::samples_total)
      .def_property_readonly("queries", [](const EstimateReport& r) { return counts_dict(r.queries); })
      .def_property_readonly("passes", [](const EstimateReport& r) {
        py::list out;
        for (const auto& p : r.passes) out.append(py::make_tuple(p.s, fraction(p.tau), p.mean));
        return out;
      });

  m.def("draw_sample", &draw_sample);
  m.def("ers",
        [](OracleSession& s, double alpha, double eps, double c, std::uint32_t iters, std::uint64_t cap) {
          return ers(s, alpha, eps, make_config(c, iters, cap));
        },
        py::arg("session"), py::arg("alpha"), py::arg("epsilon"), py::arg("c") = 6400.0,
        py::arg("max_iterations") = 64, py::arg("max_samples") = std::uint64_t{1} << 32);
  m.def("ers_gen",
        [](OracleSession& s, std::uint64_t n, double eps, double c, std::uint32_t iters, std::uint64_t cap) {
          return ers_gen(s, n, eps, make_config(c, iters, cap));
        },
        py::arg("session"), py::arg("n"), py::arg("epsilon"), py::arg("c") = 6400.0,
        py::arg("max_iterations") = 64, py::arg("max_samples") = std::uint64_t{1} << 32);
  m.def("estimate_n_birthday",
        [](OracleSession& s, double target) {
          const BirthdayReport r = estimate_n_birthday(s, target);
          py::dict d;
          d["estimate"] = r.estimate;
          d["draws"] = r.draws;
          d["collisions"] = r.collisions;
          d["queries"] = counts_dict(r.queries);
          return d;
        },
        py::arg("session"), py::arg("target_rel_error"));

  m.def("generate",
        [](const std::string& spec) {
          GeneratedGraph g = generate(parse_graph_spec(spec));
          return py::make_tuple(std::move(g.graph), certificate_dict(g.certificate));
        },
        py::arg("spec"), "Build a graph from a spec such as 'star:100' or 'erdos_renyi:1000:0.01:7'.");
  m.def("read_edge_list", py::overload_cast<const std::string&>(&read_edge_list), py::arg("path"));
  m.def("write_edge_list", py::overload_cast<const Graph&, const std::string&>(&write_edge_list),
        py::arg("graph"), py::arg("path"));

  m.def("exact_moments",
        [](const Graph& g, std::optional<std::uint32_t> alpha_upper) {
          const MomentReport r = exact_moments(g, alpha_upper);
          py::dict d;
          d["e_x"] = fraction(r.e_x);
          d["e_x2"] = fraction(r.e_x2);
          d["var_x"] = fraction(r.var_x);
          d["d"] = fraction(r.d);
          d["alpha_exact"] = r.alpha_exact;
          d["bound_var"] = r.bound_var ? fraction(*r.bound_var) : py::none();
          return d;
        },
        py::arg("graph"), py::arg("alpha_upper") = py::none());
  m.def("check_cn_bound",
        [](const Graph& g, std::optional<std::uint32_t> alpha_upper) {
          const CnVerdict v = check_cn_bound(g, alpha_upper);
          return py::dict(py::arg("cn_sum") = v.cn_sum, py::arg("bound") = v.bound,
                          py::arg("alpha") = v.alpha, py::arg("pass") = v.pass);
        },
        py::arg("graph"), py::arg("alpha_upper") = py::none());
  m.def("check_sqrt2m_bound",
        [](const Graph& g, std::optional<std::uint32_t> alpha_upper) {
          const Sqrt2mVerdict v = check_sqrt2m_bound(g, alpha_upper);
          return py::dict(py::arg("alpha") = v.alpha, py::arg("two_m") = v.two_m,
                          py::arg("max_out_degree") = v.max_out_degree, py::arg("pass") = v.pass);
        },
        py::arg("graph"), py::arg("alpha_upper") = py::none());
  m.def("termination_profile",
        [](const Graph& g, const std::string& algo, double bound, double eps, double c,
           std::uint64_t trials, std::uint64_t seed, unsigned workers) {
          TerminationProfile prof;
          {
            py::gil_scoped_release release;
            prof = termination_profile(g, parse_algorithm(algo), bound, eps, make_config(c, 64, std::uint64_t{1} << 32),
                                       trials, seed, workers);
          }
          py::dict d;
          d["d"] = fraction(prof.d);
          d["early_termination_rate"] = prof.early_termination_rate;
          d["success_rate"] = prof.success_rate;
          d["queries_min"] = prof.queries_min;
          d["queries_median"] = prof.queries_median;
          d["queries_max"] = prof.queries_max;
          py::list tau;
          for (const auto& t : prof.trials) tau.append(fraction(t.report.final_tau));
          d["final_tau"] = tau;
          return d;
        },
        py::arg("graph"), py::arg("algorithm"), py::arg("bound"), py::arg("epsilon"),
        py::arg("c") = 6400.0, py::arg("trials") = 100, py::arg("seed") = 0, py::arg("workers") = 1);
  m.def("validate_graph",
        [](const Graph& g, std::size_t max_exact_n) {
          const ValidationReport rep = validate_graph(g, max_exact_n);
          py::list checks;
          for (const auto& c : rep.checks) {
            checks.append(py::dict(py::arg("name") = c.name, py::arg("lhs") = c.lhs,
                                   py::arg("relation") = c.relation, py::arg("rhs") = c.rhs,
                                   py::arg("pass") = c.pass, py::arg("note") = c.note));
          }
          return py::make_tuple(rep.pass, checks);
        },
        py::arg("graph"), py::arg("max_exact_n") = kDefaultMaxExactN);
}
