#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lgc/graph.hpp"

namespace lgc {

// mt19937_64 with hand-written uniform draws so a seed gives the same
// stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  // Uniform integer in [0, bound); bound > 0.
  std::uint64_t Below(std::uint64_t bound);
  bool Bernoulli(double p) { return Uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

// Independent seed for sub-stream `index` of `seed` (splitmix64 mixing).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

// Ring lattice on n vertices, each joined to K/2 neighbors per side; every
// lattice edge (u, u+j) is rewired with probability beta to (u, w) for a
// uniform w that is neither u nor a current neighbor of u.
WeightedGraph WattsStrogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed);

// G(n, p) with unit weights.
WeightedGraph ErdosRenyi(std::size_t n, double p, Rng& rng);

struct Experiment1Config {
  std::size_t size_a = 300;
  std::size_t size_b = 20;
  std::size_t size_c = 550;
  std::size_t ws_mean_degree = 60;
  double beta = 1.0;
  double p_bb = 0.3;
  double p_cc = 0.02;
  double p_ab = 0.001;
  double p_ac = 0.002;
  double p_bc = 0.002;
  std::uint64_t seed = 1;

  void Validate() const;
};

struct LabeledGraph {
  WeightedGraph graph;
  VertexSet ground_truth;
  std::vector<std::string> labels;  // one per vertex
};

// A = WS(size_a, K, beta) on ids [0, |A|), then B, then C; B and C are
// Erdos-Renyi and every cross pair is drawn independently.
LabeledGraph Experiment1Graph(const Experiment1Config& config);

// Two K_k cliques joined by `bridges` disjoint edges (i, k + i). Clique 1 is
// ids [0, k) and is the ground truth.
LabeledGraph TwoCliques(std::size_t k, std::size_t bridges = 1);

struct HardInstanceSpec {
  std::size_t ell = 100;  // even, >= 4
  double n = 4e6;
  double phi = 2.5e-5;
  double c0 = 16.0;
};

// Integer multiplicities of a two-chain instance.
struct HardInstanceMultiplicities {
  std::size_t ell = 0;
  double top_edge = 0;
  double bridge = 0;
  double bottom_edge = 0;
  std::size_t bottom_length = 0;
};

struct HardInstance {
  LabeledGraph labeled;  // ground truth = top chain
  HardInstanceMultiplicities mult;
  VertexId a = 0, b = 0, c = 0, d = 0, e = 0;
  // Relative rounding drift of each multiplicity against its real target.
  double drift_top = 0, drift_bridge = 0, drift_bottom_edge = 0, drift_bottom_length = 0;

  double max_drift() const;
};

// Resolves n/ell, phi n, phi n ell / c0 and c0 / (phi ell) to integers >= 1.
// InputError when any drift exceeds 1%, with suggested parameters.
HardInstanceMultiplicities ResolveHardInstance(const HardInstanceSpec& spec,
                                               double* drifts = nullptr);

// Top chain a = 0 .. c = ell, b = ell / 2, d = ell + 1 bridged to b, bottom
// chain d .. e = ell + 1 + bottom_length. A zero bridge is allowed here.
HardInstance BuildHardInstance(const HardInstanceMultiplicities& mult);

HardInstance MakeHardInstance(const HardInstanceSpec& spec);

// Unit-weight path 0 - 1 - ... - ell.
WeightedGraph Chain(std::size_t ell);

// Weighted k-NN graph: edge (i, j) iff i is among the k nearest of j or vice
// versa (all points tied with the k-th distance count), weight
// exp(-d^2 / sigma), sigma = sigma_factor * r with r the mean squared k-th
// nearest distance.
struct KnnResult {
  WeightedGraph graph;
  double r = 0.0;
  double sigma = 0.0;
};
KnnResult KnnGraph(const std::vector<std::vector<double>>& points, std::size_t k,
                   double sigma_factor = 0.2);

}  // namespace lgc
