#include "lgc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lgc/errors.hpp"
#include "lgc/spectral.hpp"
#include "lgc/summation.hpp"

namespace lgc {

WeightedGraph WeightedGraph::FromEdges(std::size_t vertex_count,
                                       std::span<const WeightedEdge> edges) {
  if (vertex_count >= std::numeric_limits<VertexId>::max()) {
    throw InputError("vertex count exceeds VertexId range");
  }
  std::vector<WeightedEdge> directed;
  directed.reserve(2 * edges.size());
  for (const WeightedEdge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw InputError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") references a vertex >= " +
                       std::to_string(vertex_count));
    }
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw InputError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") has invalid weight");
    }
    if (e.weight == 0.0) continue;
    directed.push_back(e);
    directed.push_back({e.v, e.u, e.weight});
  }
  std::sort(directed.begin(), directed.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return a.u != b.u ? a.u < b.u : a.v < b.v;
            });

  WeightedGraph g;
  g.offsets_.assign(vertex_count + 1, 0);
  g.degrees_.assign(vertex_count, 0.0);
  for (std::size_t i = 0; i < directed.size();) {
    const WeightedEdge& head = directed[i];
    double w = 0.0;
    std::size_t j = i;
    for (; j < directed.size() && directed[j].u == head.u &&
           directed[j].v == head.v;
         ++j) {
      w += directed[j].weight;
    }
    g.neighbors_.push_back({head.v, w});
    ++g.offsets_[head.u + 1];
    g.degrees_[head.u] += w;
    i = j;
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  CompensatedSum total;
  for (double d : g.degrees_) total += d;
  g.total_volume_ = total.value();
  return g;
}

double WeightedGraph::weight(VertexId u, VertexId v) const {
  const auto row = neighbors(u);
  const auto it = std::lower_bound(
      row.begin(), row.end(), v,
      [](const Neighbor& n, VertexId id) { return n.id < id; });
  return (it != row.end() && it->id == v) ? it->weight : 0.0;
}

std::vector<WeightedEdge> WeightedGraph::Edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (const Neighbor& n : neighbors(u)) {
      if (u < n.id) out.push_back({u, n.id, n.weight});
    }
  }
  return out;
}

VertexSet::VertexSet(const WeightedGraph& graph, std::vector<VertexId> ids)
    : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  CompensatedSum vol;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!graph.valid(ids_[i])) {
      throw InputError("vertex id " + std::to_string(ids_[i]) +
                       " is not in the graph");
    }
    if (i > 0 && ids_[i] == ids_[i - 1]) {
      throw InputError("duplicate vertex id " + std::to_string(ids_[i]));
    }
    vol += graph.degree(ids_[i]);
  }
  volume_ = vol.value();
}

VertexSet VertexSet::All(const WeightedGraph& graph) {
  std::vector<VertexId> ids(graph.vertex_count());
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return VertexSet(graph, std::move(ids));
}

bool VertexSet::contains(VertexId u) const {
  return std::binary_search(ids_.begin(), ids_.end(), u);
}

double Volume(const WeightedGraph&, const VertexSet& set) {
  return set.volume();
}

double CutWeight(const WeightedGraph& graph, const VertexSet& set) {
  double cut = 0.0;
  for (VertexId u : set) {
    for (const Neighbor& n : graph.neighbors(u)) {
      if (!set.contains(n.id)) cut += n.weight;
    }
  }
  return cut;
}

double Conductance(const WeightedGraph& graph, const VertexSet& set) {
  if (set.empty() || set.size() == graph.vertex_count()) {
    throw DomainError("conductance needs a nonempty proper subset");
  }
  const double vol = set.volume();
  const double denom = std::min(vol, graph.total_volume() - vol);
  if (!(denom > 0.0)) {
    throw DomainError("conductance undefined: one side has zero volume");
  }
  return CutWeight(graph, set) / denom;
}

VertexSet Complement(const WeightedGraph& graph, const VertexSet& set) {
  std::vector<VertexId> out;
  out.reserve(graph.vertex_count() - set.size());
  auto it = set.begin();
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    if (it != set.end() && *it == u) {
      ++it;
    } else {
      out.push_back(u);
    }
  }
  return VertexSet(graph, std::move(out));
}

std::optional<VertexId> InducedSubgraph::ToLocal(VertexId host_id) const {
  const auto it =
      std::lower_bound(original_ids.begin(), original_ids.end(), host_id);
  if (it == original_ids.end() || *it != host_id) return std::nullopt;
  return static_cast<VertexId>(it - original_ids.begin());
}

InducedSubgraph Induce(const WeightedGraph& graph, const VertexSet& set) {
  if (set.empty()) throw InputError("cannot induce on an empty set");
  InducedSubgraph out;
  out.original_ids.assign(set.begin(), set.end());
  std::vector<WeightedEdge> edges;
  for (VertexId local = 0; local < out.original_ids.size(); ++local) {
    for (const Neighbor& n : graph.neighbors(out.original_ids[local])) {
      if (n.id <= out.original_ids[local]) continue;
      if (auto other = out.ToLocal(n.id)) {
        edges.push_back({local, *other, n.weight});
      }
    }
  }
  out.graph = WeightedGraph::FromEdges(out.original_ids.size(), edges);
  return out;
}

namespace {

// Component label per vertex; returns the number of components.
std::size_t Components(const WeightedGraph& graph,
                       std::vector<std::size_t>& label) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  label.assign(graph.vertex_count(), kUnset);
  std::size_t count = 0;
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < graph.vertex_count(); ++root) {
    if (label[root] != kUnset) continue;
    label[root] = count;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (const Neighbor& n : graph.neighbors(u)) {
        if (label[n.id] == kUnset) {
          label[n.id] = count;
          stack.push_back(n.id);
        }
      }
    }
    ++count;
  }
  return count;
}

SetConductanceResult DisconnectedResult(const InducedSubgraph& sub,
                                        const std::vector<std::size_t>& label) {
  SetConductanceResult r;
  r.value = 0.0;
  r.exact = true;
  r.disconnected = true;
  for (VertexId local = 0; local < label.size(); ++local) {
    if (label[local] == 0) r.best_side.push_back(sub.original_ids[local]);
  }
  return r;
}

SetConductanceResult ExactSetConductance(const InducedSubgraph& sub) {
  const WeightedGraph& g = sub.graph;
  const std::size_t k = g.vertex_count();
  const double total = g.total_volume();
  // The last vertex is pinned to the complement; phi is symmetric.
  const std::size_t free_bits = k - 1;
  const std::uint64_t limit = std::uint64_t{1} << free_bits;

  std::uint64_t members = 0;
  double cut = 0.0;
  double vol = 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;
  for (std::uint64_t i = 1; i < limit; ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    const std::uint64_t flipped = gray ^ members;
    const auto b = static_cast<VertexId>(__builtin_ctzll(flipped));
    double inside = 0.0;
    for (const Neighbor& n : g.neighbors(b)) {
      if (members >> n.id & 1U) inside += n.weight;
    }
    if (gray & flipped) {
      cut += g.degree(b) - 2.0 * inside;
      vol += g.degree(b);
    } else {
      cut -= g.degree(b) - 2.0 * inside;
      vol -= g.degree(b);
    }
    members = gray;
    const double phi = cut / std::min(vol, total - vol);
    if (phi < best) {
      best = phi;
      best_mask = members;
    }
  }

  SetConductanceResult r;
  r.value = best;
  r.exact = true;
  for (VertexId local = 0; local < k; ++local) {
    if (best_mask >> local & 1U) r.best_side.push_back(sub.original_ids[local]);
  }
  return r;
}

SetConductanceResult SpectralSweepSetConductance(const InducedSubgraph& sub) {
  const WeightedGraph& g = sub.graph;
  const std::size_t k = g.vertex_count();
  const LazyEigenpair pair = g.vertex_count() <= 2000
                                 ? SecondLazyEigenpairDense(g)
                                 : SecondLazyEigenpairPower(g);
  std::vector<double> embedding(k);
  for (VertexId u = 0; u < k; ++u) {
    embedding[u] = pair.vector[u] / std::sqrt(g.degree(u));
  }
  std::vector<VertexId> order(k);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return embedding[a] < embedding[b];
  });

  std::vector<char> in(k, 0);
  double cut = 0.0;
  double vol = 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_len = 0;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const VertexId u = order[j];
    double inside = 0.0;
    for (const Neighbor& n : g.neighbors(u)) {
      if (in[n.id]) inside += n.weight;
    }
    in[u] = 1;
    cut += g.degree(u) - 2.0 * inside;
    vol += g.degree(u);
    const double phi = cut / std::min(vol, g.total_volume() - vol);
    if (phi < best) {
      best = phi;
      best_len = j + 1;
    }
  }
  SetConductanceResult r;
  r.value = best;
  r.exact = false;
  for (std::size_t j = 0; j < best_len; ++j) {
    r.best_side.push_back(sub.original_ids[order[j]]);
  }
  std::sort(r.best_side.begin(), r.best_side.end());
  return r;
}

}  // namespace

bool IsConnected(const WeightedGraph& graph) {
  std::vector<std::size_t> label;
  return Components(graph, label) <= 1;
}

SetConductanceResult SetConductance(const WeightedGraph& graph,
                                    const VertexSet& set,
                                    SetConductanceMode mode) {
  if (set.size() < 2) {
    throw InputError("set conductance needs at least two vertices");
  }
  if (mode == SetConductanceMode::kExact &&
      set.size() > kExactSetConductanceCap) {
    throw InputError("exact set conductance is capped at " +
                     std::to_string(kExactSetConductanceCap) + " vertices");
  }
  const InducedSubgraph sub = Induce(graph, set);
  std::vector<std::size_t> label;
  if (Components(sub.graph, label) > 1) return DisconnectedResult(sub, label);
  return mode == SetConductanceMode::kExact ? ExactSetConductance(sub)
                                            : SpectralSweepSetConductance(sub);
}

}  // namespace lgc
