#include "lgc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "lgc/errors.hpp"
#include "lgc/generators.hpp"
#include "test_oracles.hpp"

namespace lgc {
namespace {

using testing::Complete;
using testing::Cycle;
using testing::Path;
using testing::TwoTriangles;

TEST(WeightedGraphTest, AggregatesParallelEdges) {
  const std::vector<WeightedEdge> edges{{0, 1, 2.0}, {1, 0, 3.0}};
  const WeightedGraph g = WeightedGraph::FromEdges(2, edges);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(g.degree(0), 5.0);
  EXPECT_DOUBLE_EQ(g.total_volume(), 10.0);
}

TEST(WeightedGraphTest, RejectsBadEdges) {
  const std::vector<WeightedEdge> loop{{0, 0, 1.0}};
  EXPECT_THROW(WeightedGraph::FromEdges(1, loop), InputError);
  const std::vector<WeightedEdge> out_of_range{{0, 2, 1.0}};
  EXPECT_THROW(WeightedGraph::FromEdges(2, out_of_range), InputError);
  const std::vector<WeightedEdge> negative{{0, 1, -1.0}};
  EXPECT_THROW(WeightedGraph::FromEdges(2, negative), InputError);
  const std::vector<WeightedEdge> nan{{0, 1, std::nan("")}};
  EXPECT_THROW(WeightedGraph::FromEdges(2, nan), InputError);
}

TEST(WeightedGraphTest, DropsZeroWeights) {
  const std::vector<WeightedEdge> edges{{0, 1, 0.0}, {1, 2, 1.0}};
  const WeightedGraph g = WeightedGraph::FromEdges(3, edges);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(g.degree(0), 0.0);
}

TEST(WeightedGraphTest, NeighborsSortedById) {
  const std::vector<WeightedEdge> edges{{0, 3}, {0, 1}, {2, 0}};
  const WeightedGraph g = WeightedGraph::FromEdges(4, edges);
  std::vector<VertexId> ids;
  for (const Neighbor& n : g.neighbors(0)) ids.push_back(n.id);
  EXPECT_EQ(ids, (std::vector<VertexId>{1, 2, 3}));
}

TEST(WeightedGraphTest, EdgeRoundTripKeepsMultiset) {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph g = testing::RandomConnected(30, 0.2, rng);
    const auto edges = g.Edges();
    const WeightedGraph h = WeightedGraph::FromEdges(g.vertex_count(), edges);
    const auto again = h.Edges();
    ASSERT_EQ(edges.size(), again.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      EXPECT_EQ(edges[i].u, again[i].u);
      EXPECT_EQ(edges[i].v, again[i].v);
      EXPECT_EQ(edges[i].weight, again[i].weight);
    }
  }
}

TEST(VertexSetTest, SortsAndRejectsDuplicates) {
  const WeightedGraph g = Cycle(4);
  const VertexSet s(g, {3, 1});
  EXPECT_EQ(std::vector<VertexId>(s.begin(), s.end()), (std::vector<VertexId>{1, 3}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(0));
  EXPECT_THROW(VertexSet(g, {1, 1}), InputError);
  EXPECT_THROW(VertexSet(g, {4}), InputError);
}

TEST(VolumeTest, Examples) {
  const WeightedGraph c4 = Cycle(4);
  EXPECT_DOUBLE_EQ(Volume(c4, VertexSet::All(c4)), 8.0);
  EXPECT_DOUBLE_EQ(Volume(c4, VertexSet(c4, {})), 0.0);
}

TEST(ConductanceTest, Examples) {
  const WeightedGraph c4 = Cycle(4);
  EXPECT_DOUBLE_EQ(Conductance(c4, VertexSet(c4, {0, 1})), 0.5);
  const WeightedGraph k4 = Complete(4);
  EXPECT_DOUBLE_EQ(Conductance(k4, VertexSet(k4, {2})), 1.0);
  const WeightedGraph tt = TwoTriangles();
  EXPECT_DOUBLE_EQ(Conductance(tt, VertexSet(tt, {0, 1, 2})), 1.0 / 7.0);
}

TEST(ConductanceTest, EmptyAndFullAreDomainErrors) {
  const WeightedGraph c4 = Cycle(4);
  EXPECT_THROW(Conductance(c4, VertexSet(c4, {})), DomainError);
  EXPECT_THROW(Conductance(c4, VertexSet::All(c4)), DomainError);
}

TEST(ConductanceTest, PropertiesOnRandomSets) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedGraph g = testing::RandomConnected(25, 0.15, rng);
    std::vector<VertexId> ids;
    std::vector<bool> mask(g.vertex_count(), false);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (rng.Bernoulli(0.4)) {
        ids.push_back(u);
        mask[u] = true;
      }
    }
    if (ids.empty() || ids.size() == g.vertex_count()) continue;
    const VertexSet s(g, ids);
    const VertexSet rest = Complement(g, s);
    const double phi = Conductance(g, s);
    EXPECT_DOUBLE_EQ(phi, Conductance(g, rest));
    EXPECT_GT(phi, 0.0);
    EXPECT_LE(phi, 1.0);
    EXPECT_NEAR(phi, testing::ConductanceByDefinition(g, mask), 1e-12);
    EXPECT_NEAR(s.volume() + rest.volume(), g.total_volume(), 1e-9);
  }
}

TEST(InduceTest, Examples) {
  const WeightedGraph k4 = Complete(4);
  const InducedSubgraph two = Induce(k4, VertexSet(k4, {1, 3}));
  EXPECT_EQ(two.graph.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(two.graph.degree(0), 1.0);
  EXPECT_DOUBLE_EQ(two.graph.degree(1), 1.0);
  EXPECT_EQ(two.original_ids, (std::vector<VertexId>{1, 3}));
  EXPECT_EQ(two.ToLocal(3), VertexId{1});
  EXPECT_FALSE(two.ToLocal(0).has_value());

  const WeightedGraph path = Path(3);
  const InducedSubgraph ends = Induce(path, VertexSet(path, {0, 2}));
  EXPECT_EQ(ends.graph.edge_count(), 0u);
  EXPECT_DOUBLE_EQ(ends.graph.degree(0), 0.0);
  EXPECT_DOUBLE_EQ(ends.graph.degree(1), 0.0);
}

TEST(SetConductanceTest, Examples) {
  const WeightedGraph p4 = Path(4);
  const auto r4 = SetConductance(p4, VertexSet::All(p4), SetConductanceMode::kExact);
  EXPECT_TRUE(r4.exact);
  EXPECT_DOUBLE_EQ(r4.value, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(r4.value, testing::SetConductanceByEnumeration(p4, {0, 1, 2, 3}));

  const WeightedGraph p3 = Path(3);
  const auto r3 = SetConductance(p3, VertexSet::All(p3), SetConductanceMode::kExact);
  EXPECT_DOUBLE_EQ(r3.value, 1.0);
  EXPECT_DOUBLE_EQ(r3.value, testing::SetConductanceByEnumeration(p3, {0, 1, 2}));
}

TEST(SetConductanceTest, DisconnectedInducedSubgraph) {
  const WeightedGraph p4 = Path(4);
  const WeightedGraph p5 = Path(5);
  const auto r = SetConductance(p5, VertexSet(p5, {0, 1, 3, 4}), SetConductanceMode::kExact);
  EXPECT_TRUE(r.disconnected);
  EXPECT_DOUBLE_EQ(r.value, 0.0);
  EXPECT_THROW(SetConductance(p4, VertexSet(p4, {0}), SetConductanceMode::kExact), InputError);
}

TEST(SetConductanceTest, ExactMatchesEnumerationAndBoundsSweep) {
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t k = 4 + rng.Below(9);
    const WeightedGraph g = testing::RandomConnected(k, 0.3, rng);
    std::vector<VertexId> all(k);
    for (VertexId u = 0; u < k; ++u) all[u] = u;
    const VertexSet s = VertexSet::All(g);
    const auto exact = SetConductance(g, s, SetConductanceMode::kExact);
    const auto sweep = SetConductance(g, s, SetConductanceMode::kSpectralSweep);
    EXPECT_NEAR(exact.value, testing::SetConductanceByEnumeration(g, all), 1e-12);
    EXPECT_LE(exact.value, sweep.value + 1e-12);
    EXPECT_FALSE(sweep.exact);
  }
}

TEST(SetConductanceTest, ExactCap) {
  const WeightedGraph g = Path(kExactSetConductanceCap + 1);
  EXPECT_THROW(SetConductance(g, VertexSet::All(g), SetConductanceMode::kExact), InputError);
  EXPECT_NO_THROW(SetConductance(g, VertexSet::All(g), SetConductanceMode::kSpectralSweep));
}

TEST(IsConnectedTest, Basic) {
  EXPECT_TRUE(IsConnected(Path(5)));
  const std::vector<WeightedEdge> edges{{0, 1}, {2, 3}};
  EXPECT_FALSE(IsConnected(WeightedGraph::FromEdges(4, edges)));
}

}  // namespace
}  // namespace lgc
