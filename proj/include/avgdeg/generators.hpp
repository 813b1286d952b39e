#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "avgdeg/graph.hpp"
#include "avgdeg/rational.hpp"

namespace avgdeg {

enum class Family { kStar, kPath, kComplete, kForestUnion, kErdosRenyi, kIsolatedPlusClique };

// Family parameters:
//   star(n)                     center 0, leaves 1..n-1
//   path(n)                     0-1-...-(n-1)
//   complete(n)                 K_n
//   forest_union(n, k, seed)    union of k random spanning trees, duplicates dropped
//   erdos_renyi(n, p, seed)     G(n, p)
//   isolated_plus_clique(n, k)  K_k on 0..k-1 plus n isolated vertices k..k+n-1
struct GraphSpec {
  Family family = Family::kStar;
  std::uint64_t n = 1;
  std::uint64_t k = 0;
  double p = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

// Colon-separated form, e.g. "star:10000", "forest_union:10000:3:7",
// "erdos_renyi:10000:0.001:1", "isolated_plus_clique:9000:1000".
// The seed field is optional (default 0). Throws std::invalid_argument.
GraphSpec parse_graph_spec(const std::string& text);
bool looks_like_graph_spec(const std::string& text);
std::string to_string(const GraphSpec& spec);
std::string family_name(Family f);

struct Certificate {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Rational d;
  std::uint32_t alpha = 0;  // upper bound on arboricity
  std::string alpha_provenance;  // "analytic", "forest-witness" or "degeneracy"
};

struct GeneratedGraph {
  Graph graph;
  Certificate certificate;
  // forest_union only: the k layers actually kept, each a forest.
  std::vector<std::vector<Edge>> forest_witness;
};

// Deterministic given the spec. Throws std::invalid_argument on bad parameters.
GeneratedGraph generate(const GraphSpec& spec);

// Certificate for an arbitrary graph: alpha from degeneracy.
Certificate certify_by_degeneracy(const Graph& g);

// Edge-list text format: "n m" then m lines "u v" with 0 <= u < v < n.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::string& path);
// Throws LoadError naming the offending line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);

}  // namespace avgdeg
