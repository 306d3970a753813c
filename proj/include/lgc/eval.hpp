#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lgc/generators.hpp"
#include "lgc/nibble.hpp"

namespace lgc {

struct ClusterReport {
  double phi_s = 0.0;
  double phi_a = 0.0;
  double conductance_ratio = 0.0;
  double precision = 0.0;
  bool precision_defined = true;  // false for an empty S
  double recall = 0.0;
  double vol_out = 0.0;   // vol(S \ A) / vol(A)
  double vol_miss = 0.0;  // vol(A \ S) / vol(A)
  double accuracy = 0.0;  // 1 - |A xor S| / |V|
  std::size_t size_s = 0;
  std::size_t size_a = 0;
  std::size_t intersection = 0;
};

// A must be nonempty. An empty S yields phi_s = NaN and precision undefined.
ClusterReport ClusterMetrics(const WeightedGraph& graph, const VertexSet& s,
                             const VertexSet& a);

// z for a two-sided 94% normal interval.
inline constexpr double kZ94 = 1.8807936081512509;

struct MeanCi {
  double mean = 0.0;
  double half_width = 0.0;  // kZ94 * sample sd / sqrt(n); 0 when n < 2
  std::size_t n = 0;
};

MeanCi MeanWithCi94(const std::vector<double>& xs);

// 12 log-spaced values over [0.001, 0.3].
std::vector<double> DefaultAlphaGrid();

struct BetaSweepConfig {
  std::vector<double> betas{0.0, 0.25, 0.5, 0.75, 1.0};
  std::size_t runs = 50;
  std::vector<double> alpha_grid = DefaultAlphaGrid();
  Experiment1Config graph;  // beta and seed are overwritten per run
  // Window and epsilon for every nibble call; vol0 is vol(A) of each graph.
  NibbleParams nibble;
  std::uint64_t rng_seed = 1;
};

struct BetaRunRecord {
  double beta = 0.0;
  std::size_t run = 0;
  std::uint64_t graph_seed = 0;
  VertexId seed_vertex = 0;
  bool ok = false;
  std::string error;
  double alpha = 0.0;
  double phi_a = 0.0;
  double phi_s = 0.0;
  double ratio = 0.0;
  double accuracy = 0.0;
  std::size_t output_size = 0;
};

struct BetaSweepRow {
  double beta = 0.0;
  MeanCi ratio;
  MeanCi accuracy;
  MeanCi phi_a;
  std::size_t failures = 0;
};

struct BetaSweepResult {
  std::vector<BetaSweepRow> rows;
  std::vector<BetaRunRecord> runs;
};

// For every beta and run: fresh Experiment-1 graph, random seed vertex in A,
// nibble at every alpha of the grid, keep the lowest phi(S). Runs where no
// alpha yields a cut are failure rows. `on_run` sees each record as it ends.
BetaSweepResult BetaSweepExperiment(
    const BetaSweepConfig& config,
    const std::function<void(const BetaRunRecord&)>& on_run = {});

struct SeedThresholds {
  double vol_out = 0.2;
  double vol_miss = 0.2;
  double phi = 1.0;
};

struct SeedOutcome {
  VertexId seed = 0;
  double weight = 0.0;  // deg(seed), or 1 for a sampled seed
  bool ok = false;
  std::string error;
  ClusterReport report;
};

struct SeedSweepResult {
  std::vector<SeedOutcome> outcomes;
  bool sampled = false;
  double total_weight = 0.0;

  // Weighted fraction of seeds with a cut meeting all three thresholds.
  double Fraction(const SeedThresholds& t) const;
};

struct SeedSweepConfig {
  NibbleParams nibble;  // seed is overwritten
  // |A| above this runs a degree-weighted sample of `sample_size` seeds.
  std::size_t exhaustive_limit = 2000;
  std::size_t sample_size = 200;
  std::uint64_t rng_seed = 1;
};

SeedSweepResult SeedSweep(const WeightedGraph& graph, const VertexSet& a,
                          const SeedSweepConfig& config);

}  // namespace lgc
