#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include "avgdeg/errors.hpp"
#include "avgdeg/estimators.hpp"
#include "avgdeg/oracle.hpp"
#include "brute_force.hpp"

namespace avgdeg {
namespace {

// Pearson chi-square statistic against a uniform distribution over counts.
double chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) stat += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  return stat;
}

double critical_value(std::size_t categories, double significance) {
  boost::math::chi_squared dist(static_cast<double>(categories - 1));
  return boost::math::quantile(boost::math::complement(dist, significance));
}

TEST(OracleSession, SingleVertex) {
  const Graph g = testing::make_graph(1, {});
  OracleSession s(g, 5);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(s.random_vertex(), 0u);
}

TEST(OracleSession, EmptyGraphIsInvalidState) {
  const Graph g;
  OracleSession s(g, 1);
  EXPECT_THROW(s.random_vertex(), InvalidState);
}

TEST(OracleSession, Degrees) {
  const Graph star = testing::star3();
  OracleSession s(star, 1);
  EXPECT_EQ(s.degree(0), 3u);
  const Graph iso = testing::make_graph(2, {});
  OracleSession t(iso, 1);
  EXPECT_EQ(t.degree(1), 0u);
  const Graph tri = testing::triangle();
  OracleSession u(tri, 1);
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(u.degree(v), 2u);
  EXPECT_THROW(u.degree(3), std::invalid_argument);
}

TEST(OracleSession, NeighborQueries) {
  const Graph p = testing::path3();
  OracleSession s(p, 3);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(s.random_neighbor(0), 1u);
  const Graph iso = testing::make_graph(3, {{0, 1}});
  OracleSession t(iso, 3);
  EXPECT_THROW(t.random_neighbor(2), NoNeighborError);
  EXPECT_THROW(t.random_neighbor(9), std::invalid_argument);
  EXPECT_EQ(t.query_count().total(), 0u);
}

TEST(OracleSession, Counters) {
  const Graph tri = testing::triangle();
  OracleSession s(tri, 9);
  EXPECT_EQ(s.query_count(), QueryCounts{});
  const VertexId v = s.random_vertex();
  s.degree(v);
  QueryCounts c = s.query_count();
  EXPECT_EQ(c.vertex_queries, 1u);
  EXPECT_EQ(c.degree_queries, 1u);
  EXPECT_EQ(c.neighbor_queries, 0u);
  EXPECT_EQ(c.total(), 2u);

  OracleSession t(tri, 9);
  draw_sample(t);
  EXPECT_EQ(t.query_count().total(), 4u);
  EXPECT_EQ(t.query_count().neighbor_queries, 1u);
  EXPECT_EQ(t.query_count().degree_queries, 2u);
}

TEST(OracleSession, EachCallIncrementsExactlyOneCounter) {
  const Graph g = testing::complete(6);
  OracleSession s(g, 21);
  Rng pick(4);
  QueryCounts prev = s.query_count();
  for (int i = 0; i < 500; ++i) {
    switch (pick.below(3)) {
      case 0: s.random_vertex(); break;
      case 1: s.degree(static_cast<VertexId>(pick.below(6))); break;
      default: s.random_neighbor(static_cast<VertexId>(pick.below(6))); break;
    }
    const QueryCounts now = s.query_count();
    EXPECT_EQ(now.total(), prev.total() + 1);
    EXPECT_GE(now.vertex_queries, prev.vertex_queries);
    EXPECT_GE(now.degree_queries, prev.degree_queries);
    EXPECT_GE(now.neighbor_queries, prev.neighbor_queries);
    prev = now;
  }
}

TEST(OracleSession, SameSeedSameTranscript) {
  const Graph g = testing::complete(7);
  auto run = [&](std::uint64_t seed) {
    OracleSession s(g, seed);
    s.record_transcript(true);
    for (int i = 0; i < 300; ++i) draw_sample(s);
    return s.transcript();
  };
  EXPECT_EQ(run(77), run(77));
  EXPECT_NE(run(77), run(78));
  EXPECT_EQ(run(77).size(), 1200u);
}

TEST(OracleSession, VertexSamplingIsUniform) {
  const Graph g = testing::make_graph(4, {});
  OracleSession s(g, 2024);
  std::vector<std::uint64_t> counts(4, 0);
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) ++counts[s.random_vertex()];
  // Binomial 4-sigma band around 1/4.
  const double sigma = std::sqrt(kDraws * 0.25 * 0.75);
  for (auto c : counts) EXPECT_NEAR(static_cast<double>(c), kDraws * 0.25, 4 * sigma);
  EXPECT_LT(chi_square_uniform(counts), critical_value(4, 1e-3));
}

TEST(OracleSession, NeighborSamplingIsUniform) {
  const Graph g = testing::star3();
  OracleSession s(g, 99);
  std::vector<std::uint64_t> counts(3, 0);
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) ++counts[s.random_neighbor(0) - 1];
  const double sigma = std::sqrt(kDraws * (1.0 / 3) * (2.0 / 3));
  for (auto c : counts) EXPECT_NEAR(static_cast<double>(c), kDraws / 3.0, 4 * sigma);
  EXPECT_LT(chi_square_uniform(counts), critical_value(3, 1e-3));

  const Graph k = testing::complete(12);
  OracleSession t(k, 100);
  std::vector<std::uint64_t> nb(11, 0);
  for (int i = 0; i < kDraws; ++i) ++nb[t.random_neighbor(11)];
  EXPECT_LT(chi_square_uniform(nb), critical_value(11, 1e-3));
}

TEST(Rng, BelowStaysInRangeAndSplitsStreams) {
  Rng r(1);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 1000ULL, (1ULL << 63) + 5}) {
    for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(bound), bound);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(5, 9), derive_seed(5, 9));
}

}  // namespace
}  // namespace avgdeg
