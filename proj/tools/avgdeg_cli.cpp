// avgdeg: benchmark runner for sublinear average-degree estimation.
//
//   avgdeg run --graph star:10000 --algo ers --eps 0.05,0.1,0.2 --trials 400 --out r.csv
//   avgdeg validate --graph complete:5
//   avgdeg gen --graph erdos_renyi:10000:0.001:1 --out er.txt
//
// Exit codes: 0 success, 1 threshold failure, 2 usage/config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "avgdeg/errors.hpp"
#include "avgdeg/harness.hpp"

namespace {

using namespace avgdeg;

int do_run(ExperimentConfig& cfg, const std::string& algo, const std::string& format,
           const std::string& out_path) {
  cfg.algorithm = parse_algorithm(algo);
  const OutputFormat fmt = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  cfg.validate();
  const RunResult result = run_experiment(cfg);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "'");
    if (fmt == OutputFormat::kJson) {
      write_json(result, cfg, out);
    } else {
      write_csv(result, cfg, out);
    }
  } else if (fmt == OutputFormat::kJson) {
    write_json(result, cfg, std::cout);
  }
  write_summary_text(result, cfg, fmt == OutputFormat::kJson && out_path.empty() ? std::cerr : std::cout);
  return result.pass ? kExitOk : kExitThreshold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublinear average-degree estimation benchmarks"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file; run options go under [run]");

  ExperimentConfig cfg;
  std::string algo = "ers";
  std::string format = "csv";
  std::string out_path;
  double alpha = 0;
  std::uint64_t n_known = 0;

  auto* run = app.add_subcommand("run", "Run repeated estimation trials and summarize them");
  run->configurable();
  run->add_option("--graph", cfg.graph, "Graph spec (family:params) or edge-list path")->required();
  run->add_option("--algo", algo, "ers | ers-gen | birthday-n")
      ->check(CLI::IsMember({"ers", "ers-gen", "ers_gen", "birthday-n", "birthday_n"}));
  run->add_option("--eps", cfg.epsilons, "Epsilon grid (comma separated)")->delimiter(',');
  run->add_option("--c", cfg.c, "Sample-size constant");
  run->add_option("--trials", cfg.trials, "Trials per epsilon");
  run->add_option("--seed", cfg.base_seed, "Base seed");
  auto* alpha_opt = run->add_option("--alpha", alpha, "Arboricity bound for ers (default: certificate)");
  auto* n_opt = run->add_option("--n", n_known, "Vertex count for ers-gen (default: true n)");
  alpha_opt->excludes(n_opt);
  run->add_option("--out", out_path, "Output file (CSV rows or JSON document)");
  run->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--workers", cfg.workers, "Worker threads");
  run->add_option("--max-iterations", cfg.max_iterations, "Cap on estimator passes");
  run->add_option("--max-samples", cfg.max_samples, "Cap on total samples per run");
  run->add_option("--min-success", cfg.min_success, "Required success rate per epsilon");
  run->add_option("--max-spread", cfg.max_scaling_spread, "Allowed max/min scaling ratio");
  run->add_flag("--timing", cfg.timing, "Record wall time per trial");

  std::string graph_source;
  std::size_t max_exact_n = kDefaultMaxExactN;
  auto* validate = app.add_subcommand("validate", "Check the analytic lemmas on one graph");
  validate->add_option("--graph", graph_source, "Graph spec or edge-list path")->required();
  validate->add_option("--max-exact-n", max_exact_n, "Largest n for exact arboricity");

  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("--graph", graph_source, "Graph spec")->required();
  gen->add_option("--out", gen_out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) {
      if (*alpha_opt) cfg.alpha = alpha;
      if (*n_opt) cfg.n = n_known;
      return do_run(cfg, algo, format, out_path);
    }
    if (*validate) {
      const LoadedGraph lg = load_graph(graph_source);
      const ValidationReport rep = validate_graph(lg.graph, max_exact_n);
      std::cout << "graph " << lg.params << "  n=" << lg.graph.num_vertices()
                << " m=" << lg.graph.num_edges() << '\n';
      write_validation(rep, std::cout);
      return rep.pass ? kExitOk : kExitThreshold;
    }
    if (*gen) {
      if (!looks_like_graph_spec(graph_source)) {
        throw std::invalid_argument("gen needs a graph spec, got '" + graph_source + "'");
      }
      const GeneratedGraph g = generate(parse_graph_spec(graph_source));
      if (gen_out.empty()) {
        write_edge_list(g.graph, std::cout);
      } else {
        write_edge_list(g.graph, gen_out);
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
