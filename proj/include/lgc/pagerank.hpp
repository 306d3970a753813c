#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lgc/graph.hpp"

namespace lgc {

// Sparse nonnegative vertex -> mass map. Entries are kept sorted by vertex,
// zero masses are never stored, and the L1 norm is cached.
class SparseMass {
 public:
  struct Entry {
    VertexId vertex;
    double mass;
  };

  SparseMass() = default;

  // Duplicate vertices are summed; zeros dropped; negative or non-finite
  // masses raise InputError.
  static SparseMass FromEntries(std::vector<Entry> entries);
  static SparseMass FromDense(std::span<const double> dense);
  static SparseMass Indicator(VertexId v, double mass = 1.0);
  // pi_S(u) = deg(u) / vol(S) on S.
  static SparseMass DegreeNormalized(const WeightedGraph& graph,
                                     const VertexSet& set);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double l1() const { return l1_; }
  double operator[](VertexId v) const;

  std::vector<double> ToDense(std::size_t vertex_count) const;

  friend bool operator==(const SparseMass& a, const SparseMass& b);

 private:
  std::vector<Entry> entries_;
  double l1_ = 0.0;
};

struct PageRankParams {
  double alpha = 0.1;    // teleport probability, (0, 1]
  double epsilon = 1e-4; // residual tolerance per unit degree, (0, 1]

  void Validate() const;
};

struct PushStats {
  std::size_t push_count = 0;
  // Sum of deg(u) over every pushed vertex; bounded by 1 / (epsilon alpha).
  double work = 0.0;
  // vol(supp(p)); bounded by 2 / ((1 - alpha) epsilon).
  double support_volume = 0.0;

  friend bool operator==(const PushStats&, const PushStats&) = default;
};

// One step of the lazy walk, v -> v W with W = (I + D^-1 A) / 2.
SparseMass LazyStep(const WeightedGraph& graph, const SparseMass& v);

enum class ExactMethod {
  // Truncated series sum_t alpha (1-alpha)^t s W^t.
  kSeries,
  // Dense symmetric solve; vertex_count <= kDenseSolveLimit.
  kDenseSolve,
  // Sparse LDL^T solve of the same system; any size.
  kSparseSolve,
};

inline constexpr std::size_t kDenseSolveLimit = 2000;

// pr_{s,alpha}. The start vector may carry negative entries (useful for
// checking p = pr_{s - r}). For the series method the truncation point T is
// the smallest with (1-alpha)^(T+1) <= tolerance.
std::vector<double> ExactPageRank(const WeightedGraph& graph,
                                  std::span<const double> start, double alpha,
                                  double tolerance = 1e-12,
                                  ExactMethod method = ExactMethod::kSeries);

std::vector<double> ExactPageRank(const WeightedGraph& graph,
                                  const SparseMass& start, double alpha,
                                  double tolerance = 1e-12,
                                  ExactMethod method = ExactMethod::kSeries);

struct ApproximatePageRankResult {
  SparseMass p;         // approximate PageRank vector
  SparseMass residual;  // r, with p = pr_{s - r}
  PushStats stats;
};

// Push-based epsilon-approximate PageRank. Violating vertices are served
// from a FIFO queue; a vertex is enqueued when its residual first reaches
// epsilon * deg and never appears in the queue twice.
ApproximatePageRankResult ApproximatePageRank(const WeightedGraph& graph,
                                              const SparseMass& start,
                                              const PageRankParams& params);

}  // namespace lgc
