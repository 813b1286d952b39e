#include "avgdeg/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "avgdeg/errors.hpp"
#include "avgdeg/parallel.hpp"
#include "avgdeg/rng.hpp"

namespace avgdeg {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

void ExperimentConfig::validate() const {
  if (graph.empty()) throw std::invalid_argument("no graph given");
  if (epsilons.empty()) throw std::invalid_argument("epsilon grid is empty");
  const double upper = algorithm == Algorithm::kBirthdayN ? 1.0 : 0.5;
  for (double e : epsilons) {
    if (!(e > 0.0 && e < upper)) {
      throw std::invalid_argument("epsilon " + format_double(e) + " outside (0, " +
                                  format_double(upper) + ")");
    }
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
  if (alpha && !(*alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (n && *n == 0) throw std::invalid_argument("n must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
}

LoadedGraph load_graph(const std::string& source) {
  if (looks_like_graph_spec(source)) {
    const GraphSpec spec = parse_graph_spec(source);
    GeneratedGraph gen = generate(spec);
    return {std::move(gen.graph), std::move(gen.certificate), family_name(spec.family),
            to_string(spec)};
  }
  Graph g = read_edge_list(source);
  Certificate cert = certify_by_degeneracy(g);
  return {std::move(g), std::move(cert), "file", source};
}

namespace {

ResultRow run_trial(const Graph& g, const ExperimentConfig& cfg, const RunResult& ctx,
                    double d, std::size_t eps_index, std::uint64_t trial) {
  ResultRow row;
  row.epsilon_index = eps_index;
  row.epsilon = cfg.epsilons[eps_index];
  row.trial = trial;
  row.seed = derive_seed(derive_seed(cfg.base_seed, eps_index), trial);
  OracleSession session(g, row.seed);
  const auto start = std::chrono::steady_clock::now();

  if (cfg.algorithm == Algorithm::kBirthdayN) {
    const BirthdayReport rep = estimate_n_birthday(session, row.epsilon);
    const double n = static_cast<double>(g.num_vertices());
    const double est = static_cast<double>(rep.estimate);
    row.target = n;
    row.estimate = est;
    row.rel_error = std::abs(est - n) / n;
    row.in_range = est >= (1 - row.epsilon) * n && est * (1 - row.epsilon) <= n;
    row.terminated = true;
    row.iterations = static_cast<std::uint32_t>(std::bit_width(rep.draws) - 1);
    row.samples_total = rep.draws;
    row.queries = rep.queries;
  } else {
    EstimatorConfig ec;
    ec.c = cfg.c;
    ec.max_iterations = cfg.max_iterations;
    ec.max_samples = cfg.max_samples;
    const EstimateReport rep = cfg.algorithm == Algorithm::kErs
                                   ? ers(session, ctx.alpha_used, row.epsilon, ec)
                                   : ers_gen(session, ctx.n_used, row.epsilon, ec);
    row.target = d;
    row.estimate = rep.estimate;
    if (rep.estimate && d > 0) {
      row.rel_error = std::abs(*rep.estimate - d) / d;
      row.in_range = *row.rel_error <= row.epsilon;
    }
    row.terminated = rep.terminated;
    row.iterations = rep.iterations;
    if (rep.iterations > 0) row.final_tau = to_double(rep.final_tau);
    row.samples_total = rep.samples_total;
    row.queries = rep.queries;
  }
  if (cfg.timing) {
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
  }
  return row;
}

std::uint64_t query_measure(const ResultRow& row, Algorithm algo) {
  return algo == Algorithm::kBirthdayN ? row.queries.vertex_queries : row.queries.total();
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) { return run_experiment(cfg, load_graph(cfg.graph)); }

RunResult run_experiment(const ExperimentConfig& cfg, LoadedGraph graph) {
  cfg.validate();
  RunResult result;
  result.graph = std::move(graph);
  const Graph& g = result.graph.graph;
  if (g.num_vertices() == 0) throw std::invalid_argument("graph has no vertices");
  result.alpha_used = cfg.alpha ? *cfg.alpha : static_cast<double>(result.graph.certificate.alpha);
  if (cfg.algorithm == Algorithm::kErs && !(result.alpha_used > 0.0)) {
    throw std::invalid_argument("ers needs a positive alpha; the graph certificate gives 0");
  }
  result.n_used = cfg.n ? *cfg.n : g.num_vertices();
  const double d = to_double(result.graph.certificate.d);

  const std::uint64_t per_eps = cfg.trials;
  const std::uint64_t total = per_eps * cfg.epsilons.size();
  result.rows.resize(total);
  parallel_for(total, cfg.workers, [&](std::uint64_t job) {
    result.rows[job] = run_trial(g, cfg, result, d, job / per_eps, job % per_eps);
  });
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.epsilon_index, a.trial) < std::tie(b.epsilon_index, b.trial);
  });

  const double n = static_cast<double>(g.num_vertices());
  result.pass = true;
  double lo = 0, hi = 0;
  for (std::size_t e = 0; e < cfg.epsilons.size(); ++e) {
    Summary s;
    s.epsilon = cfg.epsilons[e];
    s.trials = per_eps;
    std::vector<std::uint64_t> q;
    for (std::uint64_t t = 0; t < per_eps; ++t) {
      const ResultRow& row = result.rows[e * per_eps + t];
      s.successes += row.in_range;
      s.capped += !row.terminated;
      q.push_back(query_measure(row, cfg.algorithm));
    }
    std::sort(q.begin(), q.end());
    s.queries_min = q.front();
    s.queries_median = q[(q.size() - 1) / 2];
    s.queries_max = q.back();
    s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
    const double med = static_cast<double>(s.queries_median);
    const double eps2 = s.epsilon * s.epsilon;
    switch (cfg.algorithm) {
      case Algorithm::kErs:
        s.scaling_ratio = med * eps2 * d / result.alpha_used;
        break;
      case Algorithm::kErsGen:
        s.scaling_ratio = med * eps2 * std::sqrt(d / n);
        break;
      case Algorithm::kBirthdayN:
        s.scaling_ratio = med / std::sqrt(n);
        break;
    }
    s.pass = s.capped == 0 && s.success_rate >= cfg.min_success;
    result.pass = result.pass && s.pass;
    lo = e == 0 ? s.scaling_ratio : std::min(lo, s.scaling_ratio);
    hi = e == 0 ? s.scaling_ratio : std::max(hi, s.scaling_ratio);
    result.summaries.push_back(s);
  }
  if (cfg.algorithm != Algorithm::kBirthdayN && cfg.epsilons.size() > 1) {
    result.scaling_spread = lo > 0 ? hi / lo : INFINITY;
    result.scaling_pass = result.scaling_spread <= cfg.max_scaling_spread;
    result.pass = result.pass && result.scaling_pass;
  }
  return result;
}

namespace {

std::string opt(const std::optional<double>& x) { return x ? format_double(*x) : "NA"; }

}  // namespace

void write_csv(const RunResult& r, const ExperimentConfig& cfg, std::ostream& out) {
  out << "# avgdeg results v" << kCsvSchemaVersion << '\n';
  out << "family,params,n,m,d,alpha,algorithm,epsilon,trial,seed,estimate,rel_error,in_range,"
         "terminated,iterations,final_tau,samples_total,vertex_queries,degree_queries,"
         "neighbor_queries,total_queries,wall_ms\n";
  const auto& cert = r.graph.certificate;
  const std::string prefix = r.graph.family + ",\"" + r.graph.params + "\"," +
                             std::to_string(cert.n) + ',' + std::to_string(cert.m) + ',' +
                             format_double(to_double(cert.d)) + ',' +
                             format_double(r.alpha_used) + ',' + to_string(cfg.algorithm) + ',';
  for (const auto& row : r.rows) {
    out << prefix << format_double(row.epsilon) << ',' << row.trial << ',' << row.seed << ','
        << opt(row.estimate) << ',' << opt(row.rel_error) << ',' << (row.in_range ? 1 : 0) << ','
        << (row.terminated ? 1 : 0) << ',' << row.iterations << ',' << opt(row.final_tau) << ','
        << row.samples_total << ',' << row.queries.vertex_queries << ','
        << row.queries.degree_queries << ',' << row.queries.neighbor_queries << ','
        << row.queries.total() << ',' << opt(row.wall_ms) << '\n';
  }
}

namespace {

nlohmann::json optional_json(const std::optional<double>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

}  // namespace

void write_json(const RunResult& r, const ExperimentConfig& cfg, std::ostream& out) {
  using nlohmann::json;
  const auto& cert = r.graph.certificate;
  json doc;
  doc["schema_version"] = kJsonSchemaVersion;
  doc["graph"] = {{"family", r.graph.family},
                  {"params", r.graph.params},
                  {"n", cert.n},
                  {"m", cert.m},
                  {"d", to_double(cert.d)},
                  {"d_exact", to_string(cert.d)},
                  {"alpha", cert.alpha},
                  {"alpha_provenance", cert.alpha_provenance}};
  doc["config"] = {{"algorithm", to_string(cfg.algorithm)},
                   {"epsilons", cfg.epsilons},
                   {"c", cfg.c},
                   {"trials", cfg.trials},
                   {"base_seed", cfg.base_seed},
                   {"alpha_used", r.alpha_used},
                   {"n_used", r.n_used},
                   {"max_iterations", cfg.max_iterations},
                   {"max_samples", cfg.max_samples},
                   {"min_success", cfg.min_success},
                   {"max_scaling_spread", cfg.max_scaling_spread}};
  json summaries = json::array();
  for (const auto& s : r.summaries) {
    summaries.push_back({{"epsilon", s.epsilon},
                         {"trials", s.trials},
                         {"successes", s.successes},
                         {"success_rate", s.success_rate},
                         {"capped", s.capped},
                         {"queries_min", s.queries_min},
                         {"queries_median", s.queries_median},
                         {"queries_max", s.queries_max},
                         {"scaling_ratio", s.scaling_ratio},
                         {"pass", s.pass}});
  }
  doc["summaries"] = std::move(summaries);
  doc["scaling_spread"] = r.scaling_spread;
  doc["scaling_pass"] = r.scaling_pass;
  doc["pass"] = r.pass;
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"epsilon", row.epsilon},
                    {"trial", row.trial},
                    {"seed", row.seed},
                    {"estimate", optional_json(row.estimate)},
                    {"rel_error", optional_json(row.rel_error)},
                    {"in_range", row.in_range},
                    {"terminated", row.terminated},
                    {"iterations", row.iterations},
                    {"final_tau", optional_json(row.final_tau)},
                    {"samples_total", row.samples_total},
                    {"queries",
                     {{"vertex", row.queries.vertex_queries},
                      {"degree", row.queries.degree_queries},
                      {"neighbor", row.queries.neighbor_queries},
                      {"total", row.queries.total()}}},
                    {"wall_ms", optional_json(row.wall_ms)}});
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_summary_text(const RunResult& r, const ExperimentConfig& cfg, std::ostream& out) {
  const auto& cert = r.graph.certificate;
  out << "graph " << r.graph.params << "  n=" << cert.n << " m=" << cert.m
      << " d=" << format_double(to_double(cert.d)) << " alpha=" << cert.alpha << " ("
      << cert.alpha_provenance << ")\n";
  out << "algorithm " << to_string(cfg.algorithm) << "  c=" << format_double(cfg.c)
      << " trials=" << cfg.trials << " seed=" << cfg.base_seed << '\n';
  for (const auto& s : r.summaries) {
    out << "  eps=" << format_double(s.epsilon) << " success=" << s.successes << '/' << s.trials
        << " (" << format_double(s.success_rate) << ") capped=" << s.capped
        << " queries[min/med/max]=" << s.queries_min << '/' << s.queries_median << '/'
        << s.queries_max << " ratio=" << format_double(s.scaling_ratio) << ' '
        << (s.pass ? "PASS" : "FAIL") << '\n';
  }
  if (cfg.algorithm != Algorithm::kBirthdayN && cfg.epsilons.size() > 1) {
    out << "  scaling spread=" << format_double(r.scaling_spread) << " (limit "
        << format_double(cfg.max_scaling_spread) << ") " << (r.scaling_pass ? "PASS" : "FAIL")
        << '\n';
  }
  out << (r.pass ? "PASS" : "FAIL") << '\n';
}

ValidationReport validate_graph(const Graph& g, std::size_t max_exact_n) {
  ValidationReport rep;
  rep.exact = g.num_vertices() <= max_exact_n;
  std::optional<std::uint32_t> upper;
  std::string note;
  if (!rep.exact) {
    upper = degeneracy(g);
    note = "n > " + std::to_string(max_exact_n) + ": alpha replaced by degeneracy " +
           std::to_string(*upper);
  }

  const CnVerdict cn = check_cn_bound(g, upper, max_exact_n);
  rep.checks.push_back({"chiba_nishizeki", std::to_string(cn.cn_sum), "<=",
                        std::to_string(cn.bound), cn.pass, note});

  const Sqrt2mVerdict sq = check_sqrt2m_bound(g, upper, max_exact_n);
  rep.checks.push_back({"arboricity_sqrt_2m", std::to_string(std::uint64_t{sq.alpha} * sq.alpha),
                        "<=", std::to_string(sq.two_m), sq.pass,
                        "max d+ = " + std::to_string(sq.max_out_degree) +
                            " <= floor(sqrt(2m)) = " + std::to_string(sq.floor_sqrt_2m) +
                            (note.empty() ? "" : "; " + note)});

  if (g.num_vertices() > 0) {
    const MomentReport mr = exact_moments(g, upper, max_exact_n);
    rep.checks.push_back(
        {"mean_equals_d", to_string(mr.e_x), "=", to_string(mr.d), mr.mean_is_exact(), ""});
    rep.checks.push_back({"variance_bound", to_string(mr.var_x), "<=",
                          mr.bound_var ? to_string(*mr.bound_var) : "NA",
                          mr.bound_var && mr.variance_within_bound(),
                          "alpha = " + std::to_string(mr.alpha_used.value_or(0)) +
                              (note.empty() ? "" : "; " + note)});
  }
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const auto& c) { return c.pass; });
  return rep;
}

void write_validation(const ValidationReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.lhs << ' ' << c.relation << ' '
        << c.rhs;
    if (!c.note.empty()) out << "  [" << c.note << ']';
    out << '\n';
  }
  out << (report.pass ? "all checks passed" : "some checks FAILED") << '\n';
}

}  // namespace avgdeg
