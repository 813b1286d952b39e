#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "avgdeg/oracle.hpp"
#include "avgdeg/rational.hpp"

namespace avgdeg {

struct EstimatorConfig {
  double c = 6400.0;
  std::uint32_t max_iterations = 64;
  // Hard cap on total X_i draws across all passes. A pass that would exceed it
  // is not started and the run reports terminated = false.
  std::uint64_t max_samples = std::uint64_t{1} << 32;

  void validate() const;  // throws std::invalid_argument
};

struct PassRecord {
  std::uint64_t s;
  Rational tau;
  double mean;
};

struct EstimateReport {
  std::optional<double> estimate;  // set iff terminated
  bool terminated = false;
  std::uint32_t iterations = 0;
  std::uint64_t final_s = 0;
  Rational final_tau;
  std::uint64_t samples_total = 0;
  QueryCounts queries;
  std::vector<PassRecord> passes;
};

// One draw of X_i: pick u uniformly; if d_u = 0 return 0 (two queries).
// Otherwise pick a uniform neighbor v, query d_v, and return 2 d_u when u
// precedes v in the degree ordering, else 0 (four queries).
std::uint64_t draw_sample(OracleSession& session);

// ceil(c / eps^2), treating values within 1e-9 relative of an integer as that
// integer so that e.g. 6400 / 0.1^2 gives 640000 rather than 640001.
std::uint64_t initial_sample_count(double c, double epsilon);

// Bounded-arboricity estimator. Starts with s = ceil(c/eps^2), tau = alpha;
// each pass draws s fresh samples and outputs their mean X if X > tau,
// otherwise doubles s and halves tau. Never learns n.
// Throws std::invalid_argument unless 0 < epsilon < 1/2 and alpha_bound > 0.
EstimateReport ers(OracleSession& session, double alpha_bound, double epsilon,
                   const EstimatorConfig& cfg = {});

// General-graph variant with known n: tau starts at n and is quartered each
// pass while s doubles.
EstimateReport ers_gen(OracleSession& session, std::uint64_t n_known, double epsilon,
                       const EstimatorConfig& cfg = {});

struct BirthdayReport {
  std::uint64_t estimate = 0;
  std::uint64_t draws = 0;
  std::uint64_t collisions = 0;
  std::uint64_t collision_floor = 0;
  QueryCounts queries;
};

// max(8, ceil(2 / r^2)): the relative spread of k(k-1)/(2C) is about 1/sqrt(C).
std::uint64_t birthday_collision_floor(double target_rel_error);

// Population-size estimate from vertex samples only. Draws k = 2, 4, 8, ...
// vertices (each batch extends the previous sample), counts colliding pairs C,
// and stops once C reaches birthday_collision_floor; returns round(k(k-1)/2C).
// Throws std::invalid_argument unless 0 < target_rel_error < 1.
BirthdayReport estimate_n_birthday(OracleSession& session, double target_rel_error);

}  // namespace avgdeg
