#include "lgc/pagerank.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <string>

#include "lgc/errors.hpp"
#include "lgc/summation.hpp"

namespace lgc {

SparseMass SparseMass::FromEntries(std::vector<Entry> entries) {
  for (const Entry& e : entries) {
    if (!std::isfinite(e.mass) || e.mass < 0.0) {
      throw InputError("mass at vertex " + std::to_string(e.vertex) +
                       " must be finite and nonnegative");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.vertex < b.vertex; });
  SparseMass out;
  for (const Entry& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().vertex == e.vertex) {
      out.entries_.back().mass += e.mass;
    } else {
      out.entries_.push_back(e);
    }
  }
  std::erase_if(out.entries_, [](const Entry& e) { return e.mass == 0.0; });
  CompensatedSum l1;
  for (const Entry& e : out.entries_) l1 += e.mass;
  out.l1_ = l1.value();
  return out;
}

SparseMass SparseMass::FromDense(std::span<const double> dense) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) entries.push_back({static_cast<VertexId>(i), dense[i]});
  }
  return FromEntries(std::move(entries));
}

SparseMass SparseMass::Indicator(VertexId v, double mass) {
  return FromEntries({{v, mass}});
}

SparseMass SparseMass::DegreeNormalized(const WeightedGraph& graph,
                                        const VertexSet& set) {
  if (!(set.volume() > 0.0)) {
    throw DomainError("degree-normalized distribution needs positive volume");
  }
  std::vector<Entry> entries;
  for (VertexId u : set) entries.push_back({u, graph.degree(u) / set.volume()});
  return FromEntries(std::move(entries));
}

double SparseMass::operator[](VertexId v) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const Entry& e, VertexId id) { return e.vertex < id; });
  return (it != entries_.end() && it->vertex == v) ? it->mass : 0.0;
}

std::vector<double> SparseMass::ToDense(std::size_t vertex_count) const {
  std::vector<double> out(vertex_count, 0.0);
  for (const Entry& e : entries_) {
    if (e.vertex >= vertex_count) {
      throw InputError("mass vector references vertex outside the graph");
    }
    out[e.vertex] = e.mass;
  }
  return out;
}

bool operator==(const SparseMass& a, const SparseMass& b) {
  if (a.entries_.size() != b.entries_.size() || a.l1_ != b.l1_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].vertex != b.entries_[i].vertex ||
        a.entries_[i].mass != b.entries_[i].mass) {
      return false;
    }
  }
  return true;
}

void PageRankParams::Validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InputError("alpha must lie in (0, 1]");
  }
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw InputError("epsilon must lie in (0, 1]");
  }
}

namespace {

void CheckSupportDegrees(const WeightedGraph& graph, const SparseMass& v) {
  for (const auto& e : v.entries()) {
    if (!graph.valid(e.vertex)) {
      throw InputError("vertex " + std::to_string(e.vertex) +
                       " is not in the graph");
    }
    if (!(graph.degree(e.vertex) > 0.0)) {
      throw DomainError("walk undefined at degree-0 vertex " +
                        std::to_string(e.vertex));
    }
  }
}

void DenseLazyStep(const WeightedGraph& graph, const std::vector<double>& in,
                   std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    const double mass = in[u];
    if (mass == 0.0) continue;
    out[u] += 0.5 * mass;
    const double share = 0.5 * mass / graph.degree(u);
    for (const Neighbor& n : graph.neighbors(u)) out[n.id] += share * n.weight;
  }
}

std::vector<double> SeriesPageRank(const WeightedGraph& graph,
                                   std::span<const double> start, double alpha,
                                   double tolerance) {
  std::size_t steps = 0;
  if (alpha < 1.0) {
    const double t = std::ceil(std::log(tolerance) / std::log1p(-alpha)) - 1.0;
    steps = t > 0.0 ? static_cast<std::size_t>(t) : 0;
  }
  std::vector<double> walk(start.begin(), start.end());
  std::vector<double> next(walk.size());
  std::vector<double> out(walk.size());
  double coeff = alpha;
  for (std::size_t i = 0; i < walk.size(); ++i) out[i] = coeff * walk[i];
  for (std::size_t t = 1; t <= steps; ++t) {
    DenseLazyStep(graph, walk, next);
    walk.swap(next);
    coeff *= 1.0 - alpha;
    for (std::size_t i = 0; i < walk.size(); ++i) out[i] += coeff * walk[i];
  }
  return out;
}

// x K = alpha s with K = (1+alpha)/2 D - (1-alpha)/2 A symmetric positive
// definite on the positive-degree vertices; pr = x D.
std::vector<double> SolvePageRank(const WeightedGraph& graph,
                                  std::span<const double> start, double alpha,
                                  bool dense) {
  const std::size_t n = graph.vertex_count();
  std::vector<Eigen::Index> local(n, -1);
  std::vector<VertexId> host;
  for (VertexId u = 0; u < n; ++u) {
    if (graph.degree(u) > 0.0) {
      local[u] = static_cast<Eigen::Index>(host.size());
      host.push_back(u);
    }
  }
  const auto k = static_cast<Eigen::Index>(host.size());
  Eigen::VectorXd rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) rhs(i) = alpha * start[host[i]];

  Eigen::VectorXd x;
  if (dense) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      const VertexId u = host[i];
      m(i, i) = 0.5 * (1.0 + alpha) * graph.degree(u);
      for (const Neighbor& nb : graph.neighbors(u)) {
        m(i, local[nb.id]) -= 0.5 * (1.0 - alpha) * nb.weight;
      }
    }
    x = m.ldlt().solve(rhs);
  } else {
    std::vector<Eigen::Triplet<double>> triplets;
    for (Eigen::Index i = 0; i < k; ++i) {
      const VertexId u = host[i];
      triplets.emplace_back(i, i, 0.5 * (1.0 + alpha) * graph.degree(u));
      for (const Neighbor& nb : graph.neighbors(u)) {
        triplets.emplace_back(i, local[nb.id], -0.5 * (1.0 - alpha) * nb.weight);
      }
    }
    Eigen::SparseMatrix<double> m(k, k);
    m.setFromTriplets(triplets.begin(), triplets.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(m);
    if (solver.info() != Eigen::Success) {
      throw DomainError("sparse PageRank factorization failed");
    }
    x = solver.solve(rhs);
  }
  std::vector<double> out(n, 0.0);
  for (Eigen::Index i = 0; i < k; ++i) {
    out[host[i]] = x(i) * graph.degree(host[i]);
  }
  return out;
}

}  // namespace

SparseMass LazyStep(const WeightedGraph& graph, const SparseMass& v) {
  CheckSupportDegrees(graph, v);
  std::vector<SparseMass::Entry> out;
  for (const auto& e : v.entries()) {
    out.push_back({e.vertex, 0.5 * e.mass});
    const double share = 0.5 * e.mass / graph.degree(e.vertex);
    for (const Neighbor& n : graph.neighbors(e.vertex)) {
      out.push_back({n.id, share * n.weight});
    }
  }
  return SparseMass::FromEntries(std::move(out));
}

std::vector<double> ExactPageRank(const WeightedGraph& graph,
                                  std::span<const double> start, double alpha,
                                  double tolerance, ExactMethod method) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InputError("alpha must lie in (0, 1]");
  }
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    throw InputError("tolerance must lie in (0, 1)");
  }
  if (start.size() != graph.vertex_count()) {
    throw InputError("start vector length differs from vertex count");
  }
  for (VertexId u = 0; u < start.size(); ++u) {
    if (start[u] != 0.0 && !(graph.degree(u) > 0.0)) {
      throw DomainError("walk undefined at degree-0 vertex " +
                        std::to_string(u));
    }
  }
  switch (method) {
    case ExactMethod::kSeries:
      return SeriesPageRank(graph, start, alpha, tolerance);
    case ExactMethod::kDenseSolve:
      if (graph.vertex_count() > kDenseSolveLimit) {
        throw InputError("dense PageRank solve is limited to " +
                         std::to_string(kDenseSolveLimit) + " vertices");
      }
      return SolvePageRank(graph, start, alpha, /*dense=*/true);
    case ExactMethod::kSparseSolve:
      return SolvePageRank(graph, start, alpha, /*dense=*/false);
  }
  throw InputError("unknown exact PageRank method");
}

std::vector<double> ExactPageRank(const WeightedGraph& graph,
                                  const SparseMass& start, double alpha,
                                  double tolerance, ExactMethod method) {
  if (start.l1() > 1.0 + 1e-12) throw InputError("||s||_1 must be <= 1");
  const std::vector<double> dense = start.ToDense(graph.vertex_count());
  return ExactPageRank(graph, dense, alpha, tolerance, method);
}

ApproximatePageRankResult ApproximatePageRank(const WeightedGraph& graph,
                                              const SparseMass& start,
                                              const PageRankParams& params) {
  params.Validate();
  if (start.l1() > 1.0 + 1e-12) throw InputError("||s||_1 must be <= 1");
  CheckSupportDegrees(graph, start);

  const double alpha = params.alpha;
  const double eps = params.epsilon;
  const std::size_t n = graph.vertex_count();
  std::vector<double> p(n, 0.0);
  std::vector<double> r(n, 0.0);
  std::vector<char> queued(n, 0);
  std::vector<char> touched(n, 0);
  std::vector<VertexId> touched_list;
  std::vector<VertexId> queue;
  std::size_t head = 0;

  auto touch = [&](VertexId u) {
    if (!touched[u]) {
      touched[u] = 1;
      touched_list.push_back(u);
    }
  };
  for (const auto& e : start.entries()) {
    touch(e.vertex);
    r[e.vertex] = e.mass;
    if (r[e.vertex] >= eps * graph.degree(e.vertex)) {
      queued[e.vertex] = 1;
      queue.push_back(e.vertex);
    }
  }

  ApproximatePageRankResult out;
  while (head < queue.size()) {
    const VertexId u = queue[head++];
    queued[u] = 0;
    const double ru = r[u];
    const double deg = graph.degree(u);
    p[u] += alpha * ru;
    const double share = (1.0 - alpha) * ru / (2.0 * deg);
    for (const Neighbor& nb : graph.neighbors(u)) {
      const VertexId v = nb.id;
      touch(v);
      r[v] += share * nb.weight;
      if (!queued[v] && r[v] >= eps * graph.degree(v)) {
        queued[v] = 1;
        queue.push_back(v);
      }
    }
    r[u] = 0.5 * (1.0 - alpha) * ru;
    if (r[u] >= eps * deg) {
      queued[u] = 1;
      queue.push_back(u);
    }
    ++out.stats.push_count;
    out.stats.work += deg;
    // Reclaim the consumed prefix so the queue stays O(active vertices).
    if (head > 4096 && head * 2 > queue.size()) {
      queue.erase(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(head));
      head = 0;
    }
  }

  std::sort(touched_list.begin(), touched_list.end());
  std::vector<SparseMass::Entry> p_entries;
  std::vector<SparseMass::Entry> r_entries;
  CompensatedSum support_volume;
  for (VertexId u : touched_list) {
    if (p[u] > 0.0) {
      p_entries.push_back({u, p[u]});
      support_volume += graph.degree(u);
    }
    if (r[u] > 0.0) r_entries.push_back({u, r[u]});
  }
  out.stats.support_volume = support_volume.value();
  out.p = SparseMass::FromEntries(std::move(p_entries));
  out.residual = SparseMass::FromEntries(std::move(r_entries));
  return out;
}

}  // namespace lgc
