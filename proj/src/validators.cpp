#include "avgdeg/validators.hpp"

#include <algorithm>
#include <stdexcept>

#include "avgdeg/errors.hpp"

namespace avgdeg {

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) { return Rational{BigInt(num)} / BigInt(den); }

// Exact alpha when small enough, else the caller's bound, else InstanceTooLarge.
std::pair<std::uint32_t, bool> resolve_alpha(const Graph& g, std::optional<std::uint32_t> upper,
                                             std::size_t max_exact_n) {
  if (g.num_vertices() <= max_exact_n) return {exact_arboricity(g, max_exact_n), true};
  if (upper) return {*upper, false};
  throw InstanceTooLarge("n=" + std::to_string(g.num_vertices()) +
                         " too large for exact arboricity and no upper bound supplied");
}

}  // namespace

MomentReport exact_moments(const Graph& g, std::optional<std::uint32_t> alpha_upper,
                           std::size_t max_exact_n) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("exact_moments: empty graph");
  const Orientation o(g);
  std::uint64_t out_sum = 0;
  for (VertexId u = 0; u < n; ++u) out_sum += o.out_degree(u);
  // Isolated vertices have d+ = 0 and contribute nothing to either sum.
  const std::uint64_t weighted = cn_sum_vertexwise(g, o);

  MomentReport r;
  r.e_x = ratio(2 * out_sum, n);
  r.e_x2 = ratio(4 * weighted, n);
  r.var_x = r.e_x2 - r.e_x * r.e_x;
  r.d = ratio(2 * g.num_edges(), n);
  if (n <= max_exact_n) {
    r.alpha_exact = exact_arboricity(g, max_exact_n);
    r.alpha_used = r.alpha_exact;
  } else if (alpha_upper) {
    r.alpha_used = alpha_upper;
  }
  if (r.alpha_used) r.bound_var = 8 * r.d * *r.alpha_used;
  return r;
}

CnVerdict check_cn_bound(const Graph& g, std::optional<std::uint32_t> alpha_upper,
                         std::size_t max_exact_n) {
  CnVerdict v;
  std::tie(v.alpha, v.alpha_is_exact) = resolve_alpha(g, alpha_upper, max_exact_n);
  v.cn_sum = cn_sum(g);
  v.bound = 2 * g.num_edges() * v.alpha;
  v.pass = v.cn_sum <= v.bound;
  return v;
}

Sqrt2mVerdict check_sqrt2m_bound(const Graph& g, std::optional<std::uint32_t> alpha_upper,
                                 std::size_t max_exact_n) {
  Sqrt2mVerdict v;
  std::tie(v.alpha, v.alpha_is_exact) = resolve_alpha(g, alpha_upper, max_exact_n);
  v.two_m = 2 * g.num_edges();
  v.max_out_degree = Orientation(g).max_out_degree();
  v.floor_sqrt_2m = isqrt(v.two_m);
  v.pass = std::uint64_t{v.alpha} * v.alpha <= v.two_m && v.max_out_degree <= v.floor_sqrt_2m;
  return v;
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kErs:
      return "ers";
    case Algorithm::kErsGen:
      return "ers-gen";
    case Algorithm::kBirthdayN:
      return "birthday-n";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "ers") return Algorithm::kErs;
  if (name == "ers-gen" || name == "ers_gen") return Algorithm::kErsGen;
  if (name == "birthday-n" || name == "birthday_n") return Algorithm::kBirthdayN;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

TerminationProfile termination_profile(const Graph& g, Algorithm algo, double bound,
                                       double epsilon, const EstimatorConfig& cfg,
                                       std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers) {
  if (algo == Algorithm::kBirthdayN) {
    throw std::invalid_argument("termination_profile applies to ers and ers-gen only");
  }
  if (g.num_edges() == 0) throw std::invalid_argument("termination_profile needs m >= 1");
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");

  TerminationProfile p;
  p.d = ratio(2 * g.num_edges(), g.num_vertices());
  const Rational lo = p.d * (1 - exact_rational(epsilon));
  const Rational hi = p.d * (1 + exact_rational(epsilon));
  const Rational early_threshold = 8 * p.d;
  p.trials.resize(trials);

  parallel_for(trials, workers, [&](std::uint64_t i) {
    TrialRecord& t = p.trials[i];
    t.seed = derive_seed(seed, i);
    OracleSession session(g, t.seed);
    t.report = algo == Algorithm::kErs ? ers(session, bound, epsilon, cfg)
                                       : ers_gen(session, g.num_vertices(), epsilon, cfg);
    if (t.report.terminated) {
      const Rational x = exact_rational(*t.report.estimate);
      t.in_range = lo <= x && x <= hi;
      t.early_termination = t.report.final_tau > early_threshold;
    }
  });

  std::uint64_t early = 0;
  std::uint64_t success = 0;
  std::vector<std::uint64_t> queries;
  queries.reserve(trials);
  for (const auto& t : p.trials) {
    early += t.early_termination;
    success += t.in_range;
    queries.push_back(t.report.queries.total());
  }
  std::sort(queries.begin(), queries.end());
  p.early_termination_rate = static_cast<double>(early) / static_cast<double>(trials);
  p.success_rate = static_cast<double>(success) / static_cast<double>(trials);
  p.queries_min = queries.front();
  p.queries_median = queries[(trials - 1) / 2];
  p.queries_max = queries.back();
  return p;
}

}  // namespace avgdeg
