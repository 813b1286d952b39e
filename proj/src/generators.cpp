#include "avgdeg/generators.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "avgdeg/errors.hpp"
#include "avgdeg/rng.hpp"

namespace avgdeg {

namespace {

constexpr std::uint64_t kMaxVertices = std::numeric_limits<VertexId>::max();

struct FamilyInfo {
  Family family;
  const char* name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::kStar, "star"},
    {Family::kPath, "path"},
    {Family::kComplete, "complete"},
    {Family::kForestUnion, "forest_union"},
    {Family::kErdosRenyi, "erdos_renyi"},
    {Family::kIsolatedPlusClique, "isolated_plus_clique"},
};

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad " + what + " '" + s + "'");
  }
  return v;
}

double parse_real(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument("bad " + what + " '" + s + "'");
  return v;
}

Rational average_degree(std::uint64_t n, std::uint64_t m) {
  return Rational{BigInt(2 * m)} / BigInt(n);
}

std::uint32_t ceil_half(std::uint64_t k) { return static_cast<std::uint32_t>((k + 1) / 2); }

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

std::vector<std::vector<Edge>> random_forest_layers(std::uint64_t n, std::uint64_t k,
                                                    std::uint64_t seed) {
  std::vector<std::vector<Edge>> layers(k);
  std::unordered_set<std::uint64_t> used;
  std::vector<VertexId> perm(n);
  for (std::uint64_t layer = 0; layer < k; ++layer) {
    Rng rng(derive_seed(seed, layer));
    std::iota(perm.begin(), perm.end(), VertexId{0});
    for (std::uint64_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    // Random recursive tree over the shuffled order.
    for (std::uint64_t i = 1; i < n; ++i) {
      const VertexId child = perm[i];
      const VertexId parent = perm[rng.below(i)];
      if (used.insert(edge_key(child, parent)).second) {
        layers[layer].emplace_back(std::min(child, parent), std::max(child, parent));
      }
    }
  }
  return layers;
}

// Batagelj-Brandes geometric skipping over pairs (w, v), w < v.
std::vector<Edge> erdos_renyi_edges(std::uint64_t n, double p, std::uint64_t seed) {
  std::vector<Edge> edges;
  if (p <= 0.0 || n < 2) return edges;
  if (p >= 1.0) {
    for (VertexId v = 1; v < n; ++v) {
      for (VertexId w = 0; w < v; ++w) edges.emplace_back(w, v);
    }
    return edges;
  }
  Rng rng(derive_seed(seed, 0));
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.unit();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
  }
  return edges;
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return info.name;
  }
  return "?";
}

bool looks_like_graph_spec(const std::string& text) {
  const std::string head = text.substr(0, text.find(':'));
  for (const auto& info : kFamilies) {
    if (head == info.name && head.size() < text.size()) return true;
  }
  return false;
}

GraphSpec parse_graph_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty graph spec");

  GraphSpec spec;
  bool found = false;
  for (const auto& info : kFamilies) {
    if (parts[0] == info.name) {
      spec.family = info.family;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown graph family '" + parts[0] + "'");

  auto expect = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo + 1 || parts.size() > hi + 1) {
      throw std::invalid_argument("graph spec '" + text + "' has wrong number of parameters");
    }
  };
  switch (spec.family) {
    case Family::kStar:
    case Family::kPath:
    case Family::kComplete:
      expect(1, 1);
      spec.n = parse_uint(parts[1], "n");
      break;
    case Family::kForestUnion:
      expect(2, 3);
      spec.n = parse_uint(parts[1], "n");
      spec.k = parse_uint(parts[2], "k");
      if (parts.size() > 3) spec.seed = parse_uint(parts[3], "seed");
      break;
    case Family::kErdosRenyi:
      expect(2, 3);
      spec.n = parse_uint(parts[1], "n");
      spec.p = parse_real(parts[2], "p");
      if (parts.size() > 3) spec.seed = parse_uint(parts[3], "seed");
      break;
    case Family::kIsolatedPlusClique:
      expect(2, 2);
      spec.n = parse_uint(parts[1], "n_iso");
      spec.k = parse_uint(parts[2], "k");
      break;
  }
  return spec;
}

std::string to_string(const GraphSpec& spec) {
  std::ostringstream out;
  out << family_name(spec.family) << ':' << spec.n;
  switch (spec.family) {
    case Family::kForestUnion:
      out << ':' << spec.k << ':' << spec.seed;
      break;
    case Family::kErdosRenyi:
      out << ':' << spec.p << ':' << spec.seed;
      break;
    case Family::kIsolatedPlusClique:
      out << ':' << spec.k;
      break;
    default:
      break;
  }
  return out.str();
}

GeneratedGraph generate(const GraphSpec& spec) {
  GeneratedGraph out;
  std::vector<Edge> edges;
  std::uint64_t n = spec.n;
  std::uint32_t alpha = 0;
  std::string provenance = "analytic";

  if (spec.family == Family::kIsolatedPlusClique) {
    if (spec.k < 1) throw std::invalid_argument("isolated_plus_clique needs k >= 1");
    n = spec.n + spec.k;
  } else if (spec.n < 1) {
    throw std::invalid_argument(family_name(spec.family) + " needs n >= 1");
  }
  if (n > kMaxVertices) throw std::invalid_argument("n exceeds 32-bit vertex IDs");

  switch (spec.family) {
    case Family::kStar:
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
      alpha = n >= 2 ? 1 : 0;
      break;
    case Family::kPath:
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      alpha = n >= 2 ? 1 : 0;
      break;
    case Family::kComplete:
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      alpha = n >= 2 ? ceil_half(n) : 0;
      break;
    case Family::kForestUnion:
      if (spec.k < 1) throw std::invalid_argument("forest_union needs k >= 1");
      out.forest_witness = random_forest_layers(n, spec.k, spec.seed);
      for (const auto& layer : out.forest_witness) edges.insert(edges.end(), layer.begin(), layer.end());
      alpha = n >= 2 ? static_cast<std::uint32_t>(spec.k) : 0;
      provenance = "forest-witness";
      break;
    case Family::kErdosRenyi:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
      edges = erdos_renyi_edges(n, spec.p, spec.seed);
      provenance = "degeneracy";
      break;
    case Family::kIsolatedPlusClique:
      for (VertexId u = 0; u < spec.k; ++u) {
        for (VertexId v = u + 1; v < spec.k; ++v) edges.emplace_back(u, v);
      }
      alpha = spec.k >= 2 ? ceil_half(spec.k) : 0;
      break;
  }

  out.graph = Graph(n, edges);
  if (spec.family == Family::kErdosRenyi) alpha = degeneracy(out.graph);
  out.certificate = {n, out.graph.num_edges(), average_degree(n, out.graph.num_edges()), alpha,
                     provenance};
  return out;
}

Certificate certify_by_degeneracy(const Graph& g) {
  const std::uint64_t n = g.num_vertices();
  return {n, g.num_edges(), n ? average_degree(n, g.num_edges()) : Rational{0}, degeneracy(g),
          "degeneracy"};
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_edge_list(g, out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

// Splits a line into exactly two unsigned integers.
bool parse_pair(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream ss(line);
  std::string x, y, extra;
  if (!(ss >> x >> y) || (ss >> extra)) return false;
  try {
    a = parse_uint(x, "");
    b = parse_uint(y, "");
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t n = 0, m = 0;
  if (!std::getline(in, line)) throw LoadError(1, "missing header 'n m'");
  ++line_no;
  if (!parse_pair(line, n, m)) throw LoadError(line_no, "malformed header, expected 'n m'");
  if (n > kMaxVertices) throw LoadError(line_no, "n exceeds 32-bit vertex IDs");

  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (edges.size() == m) {
      if (blank(line)) continue;
      throw LoadError(line_no, "more edge lines than declared m=" + std::to_string(m));
    }
    std::uint64_t u = 0, v = 0;
    if (!parse_pair(line, u, v)) throw LoadError(line_no, "malformed edge line, expected 'u v'");
    if (u == v) throw LoadError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u >= n || v >= n) throw LoadError(line_no, "endpoint out of range (n=" + std::to_string(n) + ")");
    if (u > v) throw LoadError(line_no, "edge endpoints must satisfy u < v");
    const auto e = Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)};
    if (!seen.insert(edge_key(e.first, e.second)).second) {
      throw LoadError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back(e);
  }
  if (edges.size() != m) {
    throw LoadError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(0, "cannot open '" + path + "'");
  return read_edge_list(in);
}

}  // namespace avgdeg
