#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lgc/graph.hpp"
#include "lgc/spectral.hpp"

namespace lgc {

enum class GapMethod { kAuto, kDense, kPower };

// Sets up to this size use the dense eigensolver under GapMethod::kAuto.
inline constexpr std::size_t kDenseGapLimit = 500;

struct SpectralGapResult {
  double lambda = 0.0;
  bool dense = false;
  int iterations = 0;
  bool converged = true;
};

// lambda(A) = 1 - mu_2 of the lazy walk on G[set]. DomainError when G[set] is
// disconnected or has fewer than two vertices.
SpectralGapResult SpectralGap(const WeightedGraph& graph, const VertexSet& set,
                              GapMethod method = GapMethod::kAuto,
                              double tolerance = 1e-9);

struct MixingTimeResult {
  // Minimal t with relative pointwise distance <= 1/2; empty if the cap was
  // hit or G[set] is disconnected.
  std::optional<std::int64_t> steps;
  bool exceeded = false;
  bool disconnected = false;
  // Distance at `steps` and at `steps - 1`.
  double distance = 0.0;
  double previous_distance = 0.0;
};

// Exact tau_mix of G[set] by iterating the lazy walk from every start vertex.
// cap <= 0 selects the default 100 |set|^2.
MixingTimeResult MixingTime(const WeightedGraph& graph, const VertexSet& set,
                            std::int64_t cap = 0);

// Relative pointwise distance max_{v,u} |chi_v W^t (u) - pi(u)| / pi(u) of
// G[set] after exactly t steps.
double RelativePointwiseDistance(const WeightedGraph& graph, const VertexSet& set,
                                 std::int64_t t);

// Upper-bound estimate ceil(ln(2 / pi_min) / lambda) on G[set].
std::int64_t MixingTimeEstimate(const WeightedGraph& graph, const VertexSet& set,
                                double lambda);

enum class ConnDefinition { kMix, kLambda, kPhiS };

const char* ToString(ConnDefinition def);
ConnDefinition ParseConnDefinition(const std::string& text);

struct ConnectivityOptions {
  // Exact tau_mix is used up to this set size; the lambda estimate beyond.
  std::size_t exact_mixing_limit = 3000;
  std::int64_t mixing_cap = 0;
  GapMethod gap_method = GapMethod::kAuto;
};

struct ConnectivityReport {
  ConnDefinition definition = ConnDefinition::kMix;
  double lambda = 0.0;
  std::optional<std::int64_t> tau_mix;
  bool tau_mix_exceeded = false;
  bool tau_mix_estimated = false;
  double phi_s = 0.0;
  bool phi_s_exact = false;
  bool phi_s_disconnected = false;
  double phi_a = 0.0;
  double volume = 0.0;
  // Conn values, each clamped to [0, 1]; natural logarithm.
  double conn_mix = 0.0;
  double conn_lambda = 0.0;
  double conn_phi_s = 0.0;
  double gap_mix = 0.0;
  double gap_lambda = 0.0;
  double gap_phi_s = 0.0;
  const char* log_base = "e";

  double conn() const;
  double gap() const;
};

// All three Conn(A) variants plus Gap(A) = Conn(A) / phi(A). phi(A) is
// computed on the host graph unless supplied. G[set] must be connected.
ConnectivityReport ConnAndGap(const WeightedGraph& graph, const VertexSet& set,
                              ConnDefinition definition,
                              std::optional<double> phi_of_set = std::nullopt,
                              const ConnectivityOptions& options = {});

}  // namespace lgc
