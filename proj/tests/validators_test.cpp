#include <gtest/gtest.h>

#include "avgdeg/errors.hpp"
#include "avgdeg/generators.hpp"
#include "avgdeg/validators.hpp"
#include "brute_force.hpp"

namespace avgdeg {
namespace {

using testing::make_graph;

TEST(ExactMoments, Examples) {
  const MomentReport k2 = exact_moments(testing::k2());
  EXPECT_EQ(k2.e_x, 1);
  EXPECT_EQ(k2.e_x2, 2);
  EXPECT_EQ(k2.var_x, 1);
  EXPECT_EQ(*k2.bound_var, 8);

  const MomentReport tri = exact_moments(testing::triangle());
  EXPECT_EQ(tri.e_x, 2);
  EXPECT_EQ(tri.e_x2, 8);
  EXPECT_EQ(tri.var_x, 4);
  EXPECT_EQ(*tri.bound_var, 32);

  const MomentReport path = exact_moments(testing::path3());
  EXPECT_EQ(path.e_x, Rational(4, 3));
  EXPECT_EQ(path.e_x2, Rational(8, 3));
  EXPECT_EQ(path.var_x, Rational(8, 9));
  EXPECT_EQ(*path.bound_var, Rational(32, 3));
  for (const auto* r : {&k2, &tri, &path}) {
    EXPECT_TRUE(r->mean_is_exact());
    EXPECT_TRUE(r->variance_within_bound());
  }
}

TEST(ExactMoments, EdgelessAndGuards) {
  const MomentReport e = exact_moments(make_graph(5, {}));
  EXPECT_EQ(e.e_x, 0);
  EXPECT_EQ(e.d, 0);
  EXPECT_EQ(e.var_x, 0);
  EXPECT_EQ(*e.alpha_exact, 0u);
  EXPECT_THROW(exact_moments(Graph()), std::invalid_argument);

  const GeneratedGraph big = generate({Family::kStar, 100});
  const MomentReport no_alpha = exact_moments(big.graph);
  EXPECT_FALSE(no_alpha.alpha_exact);
  EXPECT_FALSE(no_alpha.bound_var);
  const MomentReport with_upper = exact_moments(big.graph, 1);
  EXPECT_EQ(*with_upper.alpha_used, 1u);
  EXPECT_TRUE(with_upper.variance_within_bound());
}

TEST(ExactMoments, MatchesEnumeratedDistribution) {
  Rng rng(41);
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = testing::random_small_graph(1 + rng.below(12), rng.unit(), rng);
    const auto dist = testing::sample_distribution(g);
    const MomentReport r = exact_moments(g);
    EXPECT_EQ(r.e_x, testing::moment(dist, 1));
    EXPECT_EQ(r.e_x2, testing::moment(dist, 2));
    EXPECT_EQ(r.e_x, r.d);
    EXPECT_EQ(r.var_x, r.e_x2 - r.e_x * r.e_x);
    EXPECT_TRUE(r.variance_within_bound());
  }
}

TEST(CheckCnBound, Examples) {
  const CnVerdict tri = check_cn_bound(testing::triangle());
  EXPECT_EQ(tri.cn_sum, 6u);
  EXPECT_EQ(tri.bound, 12u);
  EXPECT_TRUE(tri.pass);
  EXPECT_TRUE(tri.alpha_is_exact);

  const CnVerdict star = check_cn_bound(testing::star3());
  EXPECT_EQ(star.cn_sum, 3u);
  EXPECT_EQ(star.bound, 6u);
  EXPECT_TRUE(star.pass);

  const CnVerdict k4 = check_cn_bound(testing::complete(4));
  EXPECT_EQ(k4.cn_sum, 18u);
  EXPECT_EQ(k4.bound, 24u);
  EXPECT_TRUE(k4.pass);
}

TEST(CheckCnBound, LargeGraphNeedsUpperBound) {
  const GeneratedGraph g = generate({Family::kPath, 30});
  EXPECT_THROW(check_cn_bound(g.graph), InstanceTooLarge);
  const CnVerdict v = check_cn_bound(g.graph, 1);
  EXPECT_FALSE(v.alpha_is_exact);
  EXPECT_TRUE(v.pass);
}

TEST(CheckSqrt2mBound, Examples) {
  const Sqrt2mVerdict tri = check_sqrt2m_bound(testing::triangle());
  EXPECT_EQ(tri.alpha, 2u);
  EXPECT_EQ(tri.two_m, 6u);
  EXPECT_TRUE(tri.pass);
  const Sqrt2mVerdict k2 = check_sqrt2m_bound(testing::k2());
  EXPECT_EQ(k2.alpha, 1u);
  EXPECT_EQ(k2.two_m, 2u);
  EXPECT_TRUE(k2.pass);
  const Sqrt2mVerdict k5 = check_sqrt2m_bound(testing::complete(5));
  EXPECT_EQ(k5.alpha, 3u);
  EXPECT_EQ(k5.two_m, 20u);
  EXPECT_EQ(k5.max_out_degree, 4u);
  EXPECT_EQ(k5.floor_sqrt_2m, 4u);
  EXPECT_TRUE(k5.pass);
  EXPECT_THROW(check_sqrt2m_bound(make_graph(25, {})), InstanceTooLarge);
}

TEST(TerminationProfile, DeterministicAndWorkerIndependent) {
  const GeneratedGraph g = generate({Family::kStar, 2000});
  EstimatorConfig cfg;
  cfg.c = 200;
  const auto a = termination_profile(g.graph, Algorithm::kErs, 1, 0.1, cfg, 20, 5, 1);
  const auto b = termination_profile(g.graph, Algorithm::kErs, 1, 0.1, cfg, 20, 5, 3);
  ASSERT_EQ(a.trials.size(), b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    EXPECT_EQ(a.trials[i].seed, b.trials[i].seed);
    EXPECT_EQ(a.trials[i].report.estimate, b.trials[i].report.estimate);
    EXPECT_EQ(a.trials[i].report.queries, b.trials[i].report.queries);
  }
  EXPECT_EQ(a.success_rate, b.success_rate);
  EXPECT_EQ(a.queries_median, b.queries_median);
  EXPECT_LE(a.queries_min, a.queries_median);
  EXPECT_LE(a.queries_median, a.queries_max);

  const auto one = termination_profile(g.graph, Algorithm::kErs, 1, 0.1, cfg, 1, 77);
  const auto again = termination_profile(g.graph, Algorithm::kErs, 1, 0.1, cfg, 1, 77);
  EXPECT_EQ(one.trials[0].report.estimate, again.trials[0].report.estimate);
  EXPECT_EQ(one.trials[0].report.final_tau, again.trials[0].report.final_tau);
}

TEST(TerminationProfile, EarlyTerminationFlag) {
  // alpha = 1000 on a star (d ~ 2): any stop while tau > 16 is early.
  const GeneratedGraph g = generate({Family::kStar, 1000});
  EstimatorConfig cfg;
  cfg.c = 5;
  const auto p = termination_profile(g.graph, Algorithm::kErs, 1000, 0.2, cfg, 200, 3);
  for (const auto& t : p.trials) {
    if (t.report.terminated) {
      EXPECT_EQ(t.early_termination, t.report.final_tau > 8 * p.d);
    }
  }
  EXPECT_LE(p.early_termination_rate, 0.25);
}

TEST(TerminationProfile, RejectsBadInput) {
  EstimatorConfig cfg;
  EXPECT_THROW(termination_profile(make_graph(4, {}), Algorithm::kErs, 1, 0.1, cfg, 5, 1),
               std::invalid_argument);
  EXPECT_THROW(termination_profile(testing::k2(), Algorithm::kErs, 1, 0.1, cfg, 0, 1),
               std::invalid_argument);
  EXPECT_THROW(termination_profile(testing::k2(), Algorithm::kBirthdayN, 1, 0.1, cfg, 1, 1),
               std::invalid_argument);
}

TEST(ParseAlgorithm, Names) {
  EXPECT_EQ(parse_algorithm("ers"), Algorithm::kErs);
  EXPECT_EQ(parse_algorithm("ers-gen"), Algorithm::kErsGen);
  EXPECT_EQ(parse_algorithm("birthday_n"), Algorithm::kBirthdayN);
  EXPECT_THROW(parse_algorithm("gr08"), std::invalid_argument);
}

}  // namespace
}  // namespace avgdeg
