#include "avgdeg/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "avgdeg/errors.hpp"

namespace avgdeg {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<VertexId>::max()) {
    throw std::invalid_argument("vertex count exceeds 32-bit ID space");
  }
  std::vector<Degree> deg(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has endpoint >= n=" + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  neighbors_.resize(offsets_[n]);
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    neighbors_[cursor[u]++] = v;
    neighbors_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(v) + "," +
                                  std::to_string(*dup) + "}");
    }
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool precedes(VertexId u, VertexId v, const Graph& g) {
  if (u >= g.num_vertices() || v >= g.num_vertices()) {
    throw std::invalid_argument("precedes: vertex ID out of range");
  }
  return precedes_by_degree(u, g.degree(u), v, g.degree(v));
}

Orientation::Orientation(const Graph& g) {
  const std::size_t n = g.num_vertices();
  out_offsets_.assign(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    Degree out = 0;
    for (VertexId v : g.neighbors(u)) out += precedes_by_degree(u, g.degree(u), v, g.degree(v));
    out_offsets_[u + 1] = out_offsets_[u] + out;
  }
  out_neighbors_.reserve(out_offsets_[n]);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (precedes_by_degree(u, g.degree(u), v, g.degree(v))) out_neighbors_.push_back(v);
    }
  }
}

Degree Orientation::max_out_degree() const noexcept {
  Degree best = 0;
  for (VertexId u = 0; u < num_vertices(); ++u) best = std::max(best, out_degree(u));
  return best;
}

bool Orientation::is_acyclic() const {
  const std::size_t n = num_vertices();
  std::vector<std::uint64_t> indeg(n, 0);
  for (VertexId v : out_neighbors_) ++indeg[v];
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    VertexId u = ready.back();
    ready.pop_back();
    ++visited;
    for (VertexId v : out_neighbors(u)) {
      if (--indeg[v] == 0) ready.push_back(v);
    }
  }
  return visited == n;
}

Orientation orient(const Graph& g) { return Orientation(g); }

std::vector<Edge> ForestDecomposition::label_class(std::uint32_t label) const {
  std::vector<Edge> out;
  for (const auto& e : edges) {
    if (e.label == label) out.emplace_back(std::min(e.from, e.to), std::max(e.from, e.to));
  }
  return out;
}

ForestDecomposition forest_decomposition(const Graph& g) {
  const Orientation o(g);
  ForestDecomposition fd;
  fd.edges.reserve(o.num_edges());
  for (VertexId u = 0; u < o.num_vertices(); ++u) {
    std::uint32_t label = 0;
    for (VertexId v : o.out_neighbors(u)) fd.edges.push_back({u, v, ++label});
    fd.num_labels = std::max(fd.num_labels, label);
  }
  return fd;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

bool is_forest(std::size_t n, std::span<const Edge> edges) {
  DisjointSets sets(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n || !sets.unite(u, v)) return false;
  }
  return true;
}

std::uint64_t cn_sum_vertexwise(const Graph& g, const Orientation& o) {
  std::uint64_t total = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) total += o.out_degree(u) * g.degree(u);
  return total;
}

std::uint64_t cn_sum(const Graph& g) {
  std::uint64_t edgewise = 0;
  for (const auto& [u, v] : g.edges()) edgewise += std::min(g.degree(u), g.degree(v));
  if (edgewise != cn_sum_vertexwise(g, Orientation(g))) {
    throw std::logic_error("cn_sum: edge-wise and vertex-wise sums disagree");
  }
  return edgewise;
}

std::uint32_t degeneracy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  std::vector<Degree> deg(n);
  Degree max_deg = 0;
  for (VertexId v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = g.degree(v));

  // Bucket queue keyed by current degree (Matula-Beck).
  std::vector<std::vector<VertexId>> buckets(max_deg + 1);
  for (VertexId v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<bool> removed(n, false);
  Degree result = 0;
  Degree cur = 0;
  for (std::size_t done = 0; done < n;) {
    while (buckets[cur].empty()) ++cur;
    VertexId v = buckets[cur].back();
    buckets[cur].pop_back();
    if (removed[v] || deg[v] != cur) continue;  // stale entry
    removed[v] = true;
    ++done;
    result = std::max(result, cur);
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      buckets[--deg[w]].push_back(w);
    }
    if (cur > 0) --cur;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t exact_arboricity(const Graph& g, std::size_t max_n) {
  constexpr std::size_t kHardLimit = 26;
  const std::size_t n = g.num_vertices();
  if (n > max_n || n > kHardLimit) {
    throw InstanceTooLarge("exact_arboricity: n=" + std::to_string(n) + " exceeds limit " +
                           std::to_string(std::min(max_n, kHardLimit)));
  }
  if (g.num_edges() == 0) return 0;

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // m(S) = m(S \ {v}) + |N(v) ∩ S| with v the lowest set bit.
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<std::uint32_t> induced(std::size_t{full} + 1, 0);
  std::uint32_t best = 0;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    const auto v = static_cast<unsigned>(std::countr_zero(s));
    const std::uint32_t rest = s & (s - 1);
    induced[s] = induced[rest] + static_cast<std::uint32_t>(std::popcount(adj[v] & rest));
    const auto size = static_cast<std::uint32_t>(std::popcount(s));
    if (size >= 2) best = std::max(best, (induced[s] + size - 2) / (size - 1));
  }
  return best;
}

std::uint64_t isqrt(std::uint64_t x) noexcept {
  using Wide = unsigned __int128;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && Wide{r} * r > x) --r;
  while (Wide{r + 1} * (r + 1) <= x) ++r;
  return r;
}

}  // namespace avgdeg
