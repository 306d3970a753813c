#pragma once

#include <cstdint>
#include <vector>

#include "lgc/graph.hpp"

namespace lgc {

// Second eigenpair of the lazy walk W = (I + D^-1 A)/2 of a connected graph,
// expressed through the similar symmetric matrix
//   M = D^-1/2 (D + A)/2 D^-1/2,
// whose top eigenvector is proportional to sqrt(deg).
struct LazyEigenpair {
  double value = 0.0;
  // Unit eigenvector of M. The left eigenvector of W is D^1/2 * vector and
  // the sweep embedding is vector / sqrt(deg).
  std::vector<double> vector;
  int iterations = 0;
  bool converged = true;
};

// Dense symmetric eigensolve. Intended for graphs up to a few thousand
// vertices; used as the oracle for the power iteration below.
LazyEigenpair SecondLazyEigenpairDense(const WeightedGraph& graph);

struct PowerIterationOptions {
  double tolerance = 1e-9;
  int max_iterations = 2'000'000;
  std::uint64_t rng_seed = 0x5eed5eedULL;
};

// Power iteration on M with the sqrt(deg) direction projected out at every
// step. Stops once an extrapolated error estimate of the Rayleigh quotient
// drops below tolerance * value.
LazyEigenpair SecondLazyEigenpairPower(const WeightedGraph& graph,
                                       const PowerIterationOptions& options = {});

}  // namespace lgc
