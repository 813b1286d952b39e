#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace avgdeg {

using VertexId = std::uint32_t;
using Degree = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>;

// Immutable simple undirected graph on vertices 0..n-1, stored as CSR with
// each neighbor list sorted by ID.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, duplicate edges (in either
  // orientation) or endpoints >= n.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::uint64_t num_edges() const noexcept { return neighbors_.size() / 2; }

  Degree degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  bool has_edge(VertexId u, VertexId v) const;

  // Canonical edge list: pairs (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
};

// Degree ordering: u precedes v iff d_u < d_v, or d_u == d_v and u < v.
// Throws std::invalid_argument on out-of-range IDs.
bool precedes(VertexId u, VertexId v, const Graph& g);

// Same comparison from already-known degrees; used by the estimators, which
// learn degrees through oracle queries.
constexpr bool precedes_by_degree(VertexId u, Degree du, VertexId v, Degree dv) noexcept {
  return du < dv || (du == dv && u < v);
}

// The DAG obtained by directing every edge from its smaller endpoint in the
// degree ordering. Out-neighbor lists are sorted by ID.
class Orientation {
 public:
  explicit Orientation(const Graph& g);

  std::size_t num_vertices() const noexcept { return out_offsets_.size() - 1; }
  std::uint64_t num_edges() const noexcept { return out_neighbors_.size(); }
  Degree out_degree(VertexId u) const { return out_offsets_[u + 1] - out_offsets_[u]; }
  std::span<const VertexId> out_neighbors(VertexId u) const {
    return {out_neighbors_.data() + out_offsets_[u], out_neighbors_.data() + out_offsets_[u + 1]};
  }
  Degree max_out_degree() const noexcept;

  // Kahn's algorithm; true iff the directed graph has no cycle.
  bool is_acyclic() const;

 private:
  std::vector<std::uint64_t> out_offsets_;
  std::vector<VertexId> out_neighbors_;
};

Orientation orient(const Graph& g);

// Lemma-2 style labeling: vertex u labels its out-edges 1..d+_u in out-neighbor
// ID order, so each label class has out-degree at most one per vertex.
struct LabeledEdge {
  VertexId from;
  VertexId to;
  std::uint32_t label;
};

struct ForestDecomposition {
  std::vector<LabeledEdge> edges;
  std::uint32_t num_labels = 0;

  // Edges carrying `label`, as undirected pairs.
  std::vector<Edge> label_class(std::uint32_t label) const;
};

ForestDecomposition forest_decomposition(const Graph& g);

// True iff the undirected edge set on n vertices contains no cycle.
bool is_forest(std::size_t n, std::span<const Edge> edges);

// Sum over edges of min(d_u, d_v), computed edge-wise. Cross-checked against
// the vertex-wise form sum_u d+_u * d_u before returning.
std::uint64_t cn_sum(const Graph& g);
std::uint64_t cn_sum_vertexwise(const Graph& g, const Orientation& o);

// Iterated minimum-degree removal (bucket queue, O(n + m)).
std::uint32_t degeneracy(const Graph& g);

inline constexpr std::size_t kDefaultMaxExactN = 20;

// Nash-Williams: max over vertex subsets S, |S| >= 2, of ceil(m(S) / (|S| - 1)).
// Exponential in n; throws InstanceTooLarge when n > max_n. 0 for edgeless graphs.
std::uint32_t exact_arboricity(const Graph& g, std::size_t max_n = kDefaultMaxExactN);

// floor(sqrt(x)) in exact integer arithmetic.
std::uint64_t isqrt(std::uint64_t x) noexcept;

}  // namespace avgdeg
