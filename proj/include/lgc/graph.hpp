#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lgc {

using VertexId = std::uint32_t;

struct WeightedEdge {
  VertexId u;
  VertexId v;
  double weight = 1.0;
};

struct Neighbor {
  VertexId id;
  double weight;
};

// Immutable undirected graph in CSR form. Parallel edges are stored as a
// single entry whose weight is the multiplicity; self-loops are rejected.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Duplicate (u,v) / (v,u) pairs aggregate by summing weights. Zero weights
  // are dropped; negative or non-finite weights, self-loops and ids
  // >= vertex_count raise InputError.
  static WeightedGraph FromEdges(std::size_t vertex_count,
                                 std::span<const WeightedEdge> edges);

  std::size_t vertex_count() const { return degrees_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  // Neighbors of u sorted by id.
  std::span<const Neighbor> neighbors(VertexId u) const {
    return {neighbors_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  double degree(VertexId u) const { return degrees_[u]; }
  std::span<const double> degrees() const { return degrees_; }
  double total_volume() const { return total_volume_; }

  // 0 when u and v are not adjacent.
  double weight(VertexId u, VertexId v) const;

  // Each undirected edge once, u < v, sorted lexicographically.
  std::vector<WeightedEdge> Edges() const;

  bool valid(VertexId u) const { return u < vertex_count(); }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> neighbors_;
  std::vector<double> degrees_;
  double total_volume_ = 0.0;
};

// Sorted, duplicate-free set of vertex ids of a particular host graph, with
// its volume cached at construction.
class VertexSet {
 public:
  VertexSet() = default;

  // Sorts `ids`; raises InputError on duplicates or ids outside the graph.
  VertexSet(const WeightedGraph& graph, std::vector<VertexId> ids);

  // Every vertex of the graph.
  static VertexSet All(const WeightedGraph& graph);

  std::span<const VertexId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  double volume() const { return volume_; }
  bool contains(VertexId u) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.ids_ == b.ids_;
  }

 private:
  std::vector<VertexId> ids_;
  double volume_ = 0.0;
};

double Volume(const WeightedGraph& graph, const VertexSet& set);

// Total weight of edges with exactly one endpoint in `set`.
double CutWeight(const WeightedGraph& graph, const VertexSet& set);

// cut(S, V\S) / min(vol(S), vol(V\S)). DomainError for an empty or full set
// or when either side has zero volume.
double Conductance(const WeightedGraph& graph, const VertexSet& set);

VertexSet Complement(const WeightedGraph& graph, const VertexSet& set);

struct InducedSubgraph {
  WeightedGraph graph;
  // Local id -> host id; ascending, so local ids preserve host order.
  std::vector<VertexId> original_ids;

  std::optional<VertexId> ToLocal(VertexId host_id) const;
};

// G[S] with every edge leaving S removed. Vertices with no internal edge stay
// as degree-0 vertices.
InducedSubgraph Induce(const WeightedGraph& graph, const VertexSet& set);

bool IsConnected(const WeightedGraph& graph);

enum class SetConductanceMode { kExact, kSpectralSweep };

inline constexpr std::size_t kExactSetConductanceCap = 20;

struct SetConductanceResult {
  double value = 0.0;
  // True for full enumeration; false means `value` is an upper bound.
  bool exact = false;
  bool disconnected = false;
  // Host ids of the minimizing side T.
  std::vector<VertexId> best_side;
};

// Conductance of the best cut of G[S] measured with in-S degrees. Needs
// |S| >= 2; exact mode needs |S| <= kExactSetConductanceCap.
SetConductanceResult SetConductance(const WeightedGraph& graph,
                                    const VertexSet& set,
                                    SetConductanceMode mode);

}  // namespace lgc
