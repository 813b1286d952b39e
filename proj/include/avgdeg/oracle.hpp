#pragma once

#include <cstdint>
#include <vector>

#include "avgdeg/graph.hpp"
#include "avgdeg/rng.hpp"

namespace avgdeg {

struct QueryCounts {
  std::uint64_t vertex_queries = 0;
  std::uint64_t degree_queries = 0;
  std::uint64_t neighbor_queries = 0;

  std::uint64_t total() const noexcept { return vertex_queries + degree_queries + neighbor_queries; }
  friend bool operator==(const QueryCounts&, const QueryCounts&) = default;
};

enum class QueryKind : std::uint8_t { kVertex, kDegree, kNeighbor };

struct QueryEvent {
  QueryKind kind;
  VertexId argument;  // 0 for vertex queries
  std::uint64_t result;
  friend bool operator==(const QueryEvent&, const QueryEvent&) = default;
};

// Seeded, metered adjacency-list access to a Graph. Offers exactly three
// queries (uniform vertex, degree, uniform neighbor); there is no pair query
// and no way to read n, m or the edge set back out of a session.
//
// Not thread-safe; run one session per thread over a shared Graph.
class OracleSession {
 public:
  OracleSession(const Graph& graph, std::uint64_t seed) : graph_(&graph), rng_(seed) {}

  // Throws InvalidState on an empty graph.
  VertexId random_vertex();
  // Throws std::invalid_argument on out-of-range IDs.
  Degree degree(VertexId v);
  // Throws NoNeighborError when d_v = 0, std::invalid_argument on bad IDs.
  VertexId random_neighbor(VertexId v);

  QueryCounts query_count() const noexcept { return counts_; }

  void record_transcript(bool on) { recording_ = on; }
  const std::vector<QueryEvent>& transcript() const noexcept { return transcript_; }

 private:
  void check_id(VertexId v) const;
  void log(QueryKind kind, VertexId arg, std::uint64_t result) {
    if (recording_) transcript_.push_back({kind, arg, result});
  }

  const Graph* graph_;
  Rng rng_;
  QueryCounts counts_;
  bool recording_ = false;
  std::vector<QueryEvent> transcript_;
};

}  // namespace avgdeg
