#include "avgdeg/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace avgdeg {

namespace {

Rational from_u128(unsigned __int128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  return Rational{(hi << 64) + BigInt(static_cast<std::uint64_t>(x))};
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  }
}

// Shared doubling loop. tau_divisor is 2 (ERS) or 4 (ERS-gen).
EstimateReport threshold_search(OracleSession& session, Rational tau, unsigned tau_divisor,
                                double epsilon, const EstimatorConfig& cfg) {
  EstimateReport report;
  std::uint64_t s = initial_sample_count(cfg.c, epsilon);
  for (std::uint32_t pass = 0; pass < cfg.max_iterations; ++pass) {
    if (s > cfg.max_samples - report.samples_total) break;
    unsigned __int128 sum = 0;
    for (std::uint64_t i = 0; i < s; ++i) sum += draw_sample(session);

    const Rational total = from_u128(sum);
    report.samples_total += s;
    report.iterations = pass + 1;
    report.final_s = s;
    report.final_tau = tau;
    const double mean = static_cast<double>(sum) / static_cast<double>(s);
    report.passes.push_back({s, tau, mean});
    // X > tau  <=>  sum > tau * s, compared exactly.
    if (total > tau * s) {
      report.estimate = mean;
      report.terminated = true;
      break;
    }
    if (s > std::numeric_limits<std::uint64_t>::max() / 2) break;
    s *= 2;
    tau /= tau_divisor;
  }
  report.queries = session.query_count();
  return report;
}

}  // namespace

void EstimatorConfig::validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("c must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
}

std::uint64_t draw_sample(OracleSession& session) {
  const VertexId u = session.random_vertex();
  const Degree du = session.degree(u);
  if (du == 0) return 0;
  const VertexId v = session.random_neighbor(u);
  const Degree dv = session.degree(v);
  return precedes_by_degree(u, du, v, dv) ? 2 * du : 0;
}

std::uint64_t initial_sample_count(double c, double epsilon) {
  const double raw = c / (epsilon * epsilon);
  if (!(raw < 1.8e19)) throw std::invalid_argument("c / epsilon^2 overflows the sample counter");
  const double nearest = std::round(raw);
  const double s = std::abs(raw - nearest) <= 1e-9 * raw ? nearest : std::ceil(raw);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(s));
}

EstimateReport ers(OracleSession& session, double alpha_bound, double epsilon,
                   const EstimatorConfig& cfg) {
  check_epsilon(epsilon);
  cfg.validate();
  if (!(alpha_bound > 0.0) || !std::isfinite(alpha_bound)) {
    throw std::invalid_argument("alpha bound must be a positive finite real");
  }
  return threshold_search(session, exact_rational(alpha_bound), 2, epsilon, cfg);
}

EstimateReport ers_gen(OracleSession& session, std::uint64_t n_known, double epsilon,
                       const EstimatorConfig& cfg) {
  check_epsilon(epsilon);
  cfg.validate();
  if (n_known == 0) throw std::invalid_argument("n must be positive");
  return threshold_search(session, Rational{BigInt(n_known)}, 4, epsilon, cfg);
}

std::uint64_t birthday_collision_floor(double target_rel_error) {
  const double needed = std::ceil(2.0 / (target_rel_error * target_rel_error) - 1e-9);
  return std::max<std::uint64_t>(8, static_cast<std::uint64_t>(needed));
}

BirthdayReport estimate_n_birthday(OracleSession& session, double target_rel_error) {
  if (!(target_rel_error > 0.0 && target_rel_error < 1.0)) {
    throw std::invalid_argument("target relative error must lie in (0, 1)");
  }
  BirthdayReport report;
  report.collision_floor = birthday_collision_floor(target_rel_error);
  std::unordered_map<VertexId, std::uint64_t> seen;
  std::uint64_t batch_end = 2;
  for (;;) {
    while (report.draws < batch_end) {
      // A new draw of v collides with every earlier draw of v.
      report.collisions += seen[session.random_vertex()]++;
      ++report.draws;
    }
    if (report.collisions >= report.collision_floor) break;
    batch_end *= 2;
  }
  const long double k = static_cast<long double>(report.draws);
  const long double n_hat = k * (k - 1) / (2.0L * static_cast<long double>(report.collisions));
  report.estimate = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(n_hat)));
  report.queries = session.query_count();
  return report;
}

}  // namespace avgdeg
