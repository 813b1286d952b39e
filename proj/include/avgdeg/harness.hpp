#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "avgdeg/estimators.hpp"
#include "avgdeg/generators.hpp"
#include "avgdeg/validators.hpp"

namespace avgdeg {

inline constexpr int kCsvSchemaVersion = 1;
inline constexpr int kJsonSchemaVersion = 1;

// Exit-code contract of the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitThreshold = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { kCsv, kJson };

struct ExperimentConfig {
  std::string graph;  // GraphSpec text or edge-list path
  Algorithm algorithm = Algorithm::kErs;
  std::vector<double> epsilons{0.1};
  double c = 6400.0;
  std::uint64_t trials = 100;
  std::uint64_t base_seed = 0;
  std::optional<double> alpha;       // ERS; defaults to the graph certificate
  std::optional<std::uint64_t> n;    // ERS-gen; defaults to the true n
  std::uint32_t max_iterations = 64;
  std::uint64_t max_samples = std::uint64_t{1} << 32;
  unsigned workers = 1;
  bool timing = false;               // wall time is "NA" unless set
  double min_success = 2.0 / 3.0;
  double max_scaling_spread = 2.0;

  // Throws std::invalid_argument. Epsilons must lie in (0, 1/2) for ers and
  // ers-gen; for birthday-n the value is the target relative error in (0, 1).
  void validate() const;
};

struct LoadedGraph {
  Graph graph;
  Certificate certificate;
  std::string family;  // generator family, or "file"
  std::string params;  // spec text, or the path
};

// Generates from a spec string or reads an edge-list file (certified by degeneracy).
LoadedGraph load_graph(const std::string& source);

struct ResultRow {
  std::size_t epsilon_index = 0;
  double epsilon = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<double> estimate;
  double target = 0;  // d, or n for birthday-n
  std::optional<double> rel_error;
  bool in_range = false;
  bool terminated = false;
  std::uint32_t iterations = 0;
  std::optional<double> final_tau;
  std::uint64_t samples_total = 0;
  QueryCounts queries;
  std::optional<double> wall_ms;
};

struct Summary {
  double epsilon = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t capped = 0;  // runs that hit max_iterations / max_samples
  double success_rate = 0;
  std::uint64_t queries_min = 0;
  std::uint64_t queries_median = 0;
  std::uint64_t queries_max = 0;
  // ers: median * eps^2 * d / alpha; ers-gen: median * eps^2 * sqrt(d / n);
  // birthday-n: median vertex queries / sqrt(n).
  double scaling_ratio = 0;
  bool pass = false;
};

struct RunResult {
  LoadedGraph graph;
  double alpha_used = 0;
  std::uint64_t n_used = 0;
  std::vector<ResultRow> rows;  // sorted by (epsilon index, trial)
  std::vector<Summary> summaries;
  double scaling_spread = 1.0;  // max/min scaling_ratio across the grid
  bool scaling_pass = true;
  bool pass = false;
};

// Trial t at grid point e uses seed derive_seed(derive_seed(base_seed, e), t).
RunResult run_experiment(const ExperimentConfig& cfg);
RunResult run_experiment(const ExperimentConfig& cfg, LoadedGraph graph);

void write_csv(const RunResult& result, const ExperimentConfig& cfg, std::ostream& out);
void write_json(const RunResult& result, const ExperimentConfig& cfg, std::ostream& out);
void write_summary_text(const RunResult& result, const ExperimentConfig& cfg, std::ostream& out);

struct CheckLine {
  std::string name;
  std::string lhs;
  std::string relation;  // "<=" or "="
  std::string rhs;
  bool pass = false;
  std::string note;
};

struct ValidationReport {
  std::vector<CheckLine> checks;
  bool exact = false;  // arboricity computed exactly
  bool pass = false;
};

// Chiba-Nishizeki bound, alpha^2 <= 2m (with max d+ <= floor(sqrt 2m)),
// E[X_i] = d and Var[X_i] <= 8 d alpha. Above max_exact_n the arboricity is
// replaced by the degeneracy, an upper bound.
ValidationReport validate_graph(const Graph& g, std::size_t max_exact_n = kDefaultMaxExactN);
void write_validation(const ValidationReport& report, std::ostream& out);

// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace avgdeg
