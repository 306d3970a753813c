#include "lgc/eval.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "lgc/errors.hpp"
#include "lgc/generators.hpp"
#include "test_oracles.hpp"

namespace lgc {
namespace {

TEST(ClusterMetricsTest, IdentityAndDisjoint) {
  const LabeledGraph lg = TwoCliques(10);
  const ClusterReport same = ClusterMetrics(lg.graph, lg.ground_truth, lg.ground_truth);
  EXPECT_EQ(same.precision, 1.0);
  EXPECT_EQ(same.recall, 1.0);
  EXPECT_EQ(same.accuracy, 1.0);
  EXPECT_EQ(same.vol_out, 0.0);
  EXPECT_EQ(same.vol_miss, 0.0);
  EXPECT_DOUBLE_EQ(same.conductance_ratio, 1.0);

  const VertexSet other = Complement(lg.graph, lg.ground_truth);
  const ClusterReport disjoint = ClusterMetrics(lg.graph, other, lg.ground_truth);
  EXPECT_EQ(disjoint.precision, 0.0);
  EXPECT_EQ(disjoint.recall, 0.0);
  EXPECT_EQ(disjoint.accuracy, 0.0);
}

TEST(ClusterMetricsTest, HandComputedPartialOverlap) {
  const LabeledGraph lg = TwoCliques(10);
  // S = {5..9} of A plus {10, 11} of the other clique.
  const VertexSet s(lg.graph, {5, 6, 7, 8, 9, 10, 11});
  const ClusterReport r = ClusterMetrics(lg.graph, s, lg.ground_truth);
  EXPECT_EQ(r.intersection, 5u);
  EXPECT_DOUBLE_EQ(r.precision, 5.0 / 7.0);
  EXPECT_DOUBLE_EQ(r.recall, 0.5);
  EXPECT_DOUBLE_EQ(r.accuracy, 1.0 - 7.0 / 20.0);
  EXPECT_DOUBLE_EQ(r.vol_out, (10.0 + 9.0) / 91.0);
  EXPECT_DOUBLE_EQ(r.vol_miss, 46.0 / 91.0);
  EXPECT_DOUBLE_EQ(r.phi_s, Conductance(lg.graph, s));
}

TEST(ClusterMetricsTest, EmptyOutput) {
  const LabeledGraph lg = TwoCliques(4);
  const ClusterReport r = ClusterMetrics(lg.graph, VertexSet(lg.graph, {}), lg.ground_truth);
  EXPECT_FALSE(r.precision_defined);
  EXPECT_TRUE(std::isnan(r.phi_s));
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_THROW(ClusterMetrics(lg.graph, lg.ground_truth, VertexSet(lg.graph, {})), InputError);
}

TEST(ClusterMetricsTest, AccuracyOneOnlyForEqualSets) {
  Rng rng(3);
  const WeightedGraph g = testing::RandomConnected(30, 0.2, rng);
  const VertexSet a(g, {0, 1, 2, 3, 4, 5});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<VertexId> ids;
    for (VertexId u = 0; u < 8; ++u) {
      if (rng.Bernoulli(0.7)) ids.push_back(u);
    }
    if (ids.empty()) continue;
    const VertexSet s(g, ids);
    EXPECT_EQ(ClusterMetrics(g, s, a).accuracy == 1.0, s == a);
  }
}

TEST(MeanCiTest, SampleStatistics) {
  const MeanCi ci = MeanWithCi94({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(ci.mean, 2.5);
  const double sd = std::sqrt((2.25 + 0.25 + 0.25 + 2.25) / 3.0);
  EXPECT_NEAR(ci.half_width, kZ94 * sd / 2.0, 1e-15);
  EXPECT_EQ(ci.n, 4u);
  EXPECT_EQ(MeanWithCi94({7.0}).half_width, 0.0);
  // Two-sided 94%: Phi(z) = 0.97.
  EXPECT_NEAR(0.5 * std::erfc(-kZ94 / std::sqrt(2.0)), 0.97, 1e-12);
}

TEST(AlphaGridTest, LogSpaced) {
  const auto grid = DefaultAlphaGrid();
  ASSERT_EQ(grid.size(), 12u);
  EXPECT_NEAR(grid.front(), 0.001, 1e-15);
  EXPECT_NEAR(grid.back(), 0.3, 1e-15);
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    EXPECT_NEAR(grid[i] * grid[i], grid[i - 1] * grid[i + 1], 1e-15);
  }
}

TEST(BetaSweepTest, ShapeAndDeterminism) {
  BetaSweepConfig config;
  config.betas = {0.0, 1.0};
  config.runs = 2;
  config.alpha_grid = {0.01, 0.05};
  std::size_t seen = 0;
  const BetaSweepResult a = BetaSweepExperiment(config, [&](const BetaRunRecord&) { ++seen; });
  const BetaSweepResult b = BetaSweepExperiment(config);
  ASSERT_EQ(a.rows.size(), 2u);
  EXPECT_EQ(a.runs.size(), 4u);
  EXPECT_EQ(seen, 4u);
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    EXPECT_EQ(a.runs[i].phi_s, b.runs[i].phi_s);
    EXPECT_EQ(a.runs[i].seed_vertex, b.runs[i].seed_vertex);
    EXPECT_LT(a.runs[i].seed_vertex, 300u);
    if (a.runs[i].ok) {
      EXPECT_DOUBLE_EQ(a.runs[i].ratio, a.runs[i].phi_s / a.runs[i].phi_a);
    }
  }
  EXPECT_EQ(a.rows[0].beta, 0.0);
  EXPECT_EQ(a.rows[1].beta, 1.0);
}

TEST(SeedSweepTest, TwoCliquesAllSeedsGood) {
  const LabeledGraph lg = TwoCliques(10);
  SeedSweepConfig config;
  config.nibble.conn = 0.5;
  config.nibble.vol0 = 91.0;
  const SeedSweepResult r = SeedSweep(lg.graph, lg.ground_truth, config);
  EXPECT_EQ(r.outcomes.size(), 10u);
  EXPECT_FALSE(r.sampled);
  EXPECT_DOUBLE_EQ(r.Fraction({0.5, 0.5, 1.0}), 1.0);
  EXPECT_DOUBLE_EQ(r.Fraction({0.0, 0.0, 0.0}), 0.0);
}

TEST(SeedSweepTest, FractionMonotoneInThresholds) {
  Experiment1Config gc;
  gc.seed = 3;
  const LabeledGraph lg = Experiment1Graph(gc);
  SeedSweepConfig config;
  config.nibble.conn = 0.3;
  config.nibble.vol0 = lg.ground_truth.volume();
  config.exhaustive_limit = 10;
  config.sample_size = 40;
  const SeedSweepResult r = SeedSweep(lg.graph, lg.ground_truth, config);
  EXPECT_TRUE(r.sampled);
  EXPECT_EQ(r.outcomes.size(), 40u);
  const std::vector<double> steps{0.0, 0.05, 0.1, 0.2, 0.5, 1.0};
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    const SeedThresholds lo{steps[i], 0.2, 0.2};
    const SeedThresholds hi{steps[i + 1], 0.2, 0.2};
    EXPECT_LE(r.Fraction(lo), r.Fraction(hi));
    EXPECT_LE(r.Fraction({0.2, steps[i], 0.2}), r.Fraction({0.2, steps[i + 1], 0.2}));
    EXPECT_LE(r.Fraction({0.2, 0.2, steps[i]}), r.Fraction({0.2, 0.2, steps[i + 1]}));
  }
}

}  // namespace
}  // namespace lgc
