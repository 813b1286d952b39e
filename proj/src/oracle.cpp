#include "avgdeg/oracle.hpp"

#include <stdexcept>
#include <string>

#include "avgdeg/errors.hpp"

namespace avgdeg {

void OracleSession::check_id(VertexId v) const {
  if (v >= graph_->num_vertices()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
}

VertexId OracleSession::random_vertex() {
  const std::size_t n = graph_->num_vertices();
  if (n == 0) throw InvalidState("random_vertex on an empty graph");
  const auto v = static_cast<VertexId>(rng_.below(n));
  ++counts_.vertex_queries;
  log(QueryKind::kVertex, 0, v);
  return v;
}

Degree OracleSession::degree(VertexId v) {
  check_id(v);
  const Degree d = graph_->degree(v);
  ++counts_.degree_queries;
  log(QueryKind::kDegree, v, d);
  return d;
}

VertexId OracleSession::random_neighbor(VertexId v) {
  check_id(v);
  auto nb = graph_->neighbors(v);
  if (nb.empty()) throw NoNeighborError("vertex " + std::to_string(v) + " has no neighbors");
  const VertexId w = nb[rng_.below(nb.size())];
  ++counts_.neighbor_queries;
  log(QueryKind::kNeighbor, v, w);
  return w;
}

}  // namespace avgdeg
