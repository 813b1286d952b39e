#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avgdeg/estimators.hpp"
#include "avgdeg/graph.hpp"
#include "avgdeg/parallel.hpp"
#include "avgdeg/rational.hpp"

namespace avgdeg {

// Exact first and second moments of one X_i draw, from the orientation:
//   E[X]   = (2/n) sum_u d+_u
//   E[X^2] = (4/n) sum_u d+_u d_u
struct MomentReport {
  Rational e_x;
  Rational e_x2;
  Rational var_x;
  Rational d;
  std::optional<std::uint32_t> alpha_exact;
  // Arboricity value used for bound_var: alpha_exact, or a caller-supplied
  // upper bound when the exact value was not computed.
  std::optional<std::uint32_t> alpha_used;
  std::optional<Rational> bound_var;  // 8 d alpha_used

  bool mean_is_exact() const { return e_x == d; }
  bool variance_within_bound() const { return !bound_var || var_x <= *bound_var; }
};

// Computes alpha_exact when n <= max_exact_n; otherwise uses alpha_upper if given.
// Throws std::invalid_argument on an empty graph.
MomentReport exact_moments(const Graph& g, std::optional<std::uint32_t> alpha_upper = std::nullopt,
                           std::size_t max_exact_n = kDefaultMaxExactN);

struct CnVerdict {
  std::uint64_t cn_sum = 0;
  std::uint64_t bound = 0;  // 2 m alpha
  std::uint32_t alpha = 0;
  bool alpha_is_exact = false;
  bool pass = false;
};

// sum_E min(d_u, d_v) <= 2 m alpha. alpha is exact when n <= max_exact_n, else
// alpha_upper; throws InstanceTooLarge when neither is available.
CnVerdict check_cn_bound(const Graph& g, std::optional<std::uint32_t> alpha_upper = std::nullopt,
                         std::size_t max_exact_n = kDefaultMaxExactN);

struct Sqrt2mVerdict {
  std::uint32_t alpha = 0;
  bool alpha_is_exact = false;
  std::uint64_t two_m = 0;
  std::uint64_t max_out_degree = 0;
  std::uint64_t floor_sqrt_2m = 0;
  bool pass = false;  // alpha^2 <= 2m and max d+ <= floor(sqrt(2m))
};

// Same gating as check_cn_bound; a degeneracy value is a valid stand-in for
// alpha_upper here since degeneracy <= max d+ <= sqrt(2m).
Sqrt2mVerdict check_sqrt2m_bound(const Graph& g,
                                 std::optional<std::uint32_t> alpha_upper = std::nullopt,
                                 std::size_t max_exact_n = kDefaultMaxExactN);

enum class Algorithm { kErs, kErsGen, kBirthdayN };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);  // "ers", "ers-gen"/"ers_gen", "birthday-n"/"birthday_n"

struct TrialRecord {
  std::uint64_t seed = 0;
  EstimateReport report;
  bool in_range = false;          // terminated and |X - d| <= eps d
  bool early_termination = false; // terminated with final tau > 8d
};

struct TerminationProfile {
  Rational d;
  std::vector<TrialRecord> trials;  // in trial-index order
  double early_termination_rate = 0;
  double success_rate = 0;
  std::uint64_t queries_min = 0;
  std::uint64_t queries_median = 0;  // lower median
  std::uint64_t queries_max = 0;
};

// Trial i runs on an OracleSession seeded with derive_seed(seed, i). `bound`
// is alpha for ERS and ignored for ERS-gen (which receives the true n).
// Trials are distributed over `workers` threads; results do not depend on it.
TerminationProfile termination_profile(const Graph& g, Algorithm algo, double bound,
                                       double epsilon, const EstimatorConfig& cfg,
                                       std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers = 1);

}  // namespace avgdeg
