#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/pagerank.hpp"

namespace lgc {

struct NibbleParams {
  VertexId seed = 0;
  // Caller-supplied internal connectivity Conn(A), in (0, 1].
  double conn = 0.1;
  // Volume estimate of the target cluster.
  double vol0 = 1.0;
  double alpha_scale = 1.0 / 9.0;
  double c_min = 1.0 / 16.0;
  double c_max = 0.5;
  std::optional<double> alpha_override;
  std::optional<double> epsilon_override;

  // min(alpha_scale * conn, 1/9) unless overridden.
  double Alpha() const;
  // 1 / (10 vol0) unless overridden.
  double Epsilon() const;
  void Validate() const;
};

enum class NibbleMode { kGap, kClassic };

const char* ToString(NibbleMode mode);

struct NibbleResult {
  VertexSet output_set;
  double conductance = 0.0;
  PushStats stats;
  NibbleParams params;
  double alpha = 0.0;
  double epsilon = 0.0;
  NibbleMode mode = NibbleMode::kGap;
  // Number of distinct threshold sets examined.
  std::size_t candidates = 0;
  std::vector<std::string> warnings;
};

// Threshold sets S'_c = {u in supp(p) : p(u) >= c deg(u) / vol0} for
// c in [c_min, c_max] are exactly the sweep prefixes j with
//   value(v_j) >= c_min,  value(v_{j+1}) < c_max,  value(v_{j+1}) < value(v_j)
// where value(u) = p(u) vol0 / deg(u) and value(v_{k+1}) = 0 past the
// support. Returns the minimum-conductance one (shortest on ties).
NibbleResult PageRankNibble(const WeightedGraph& graph, const NibbleParams& params);

struct AutoNibbleResult {
  NibbleResult best;
  std::optional<NibbleResult> gap;
  std::optional<NibbleResult> classic;
  std::string gap_error;
  std::string classic_error;
};

// Runs gap mode (alpha from conn) and classic mode
// (alpha = phi_target * classic_alpha_scale) with the same epsilon and keeps
// the smaller conductance; ties go to gap mode.
AutoNibbleResult NibbleAuto(const WeightedGraph& graph, const NibbleParams& gap_params,
                            double phi_target, double classic_alpha_scale = 1.0);

struct Vol0SearchResult {
  NibbleResult result;
  double vol0 = 0.0;
  // (vol0, conductance or +inf when the window was empty) for every attempt.
  std::vector<std::pair<double, double>> attempts;
};

// Tries vol0 = 1, 2, 4, ... <= vol0_max and returns the first run whose
// output has conductance <= phi_accept. Other fields of `params` (seed, conn,
// alpha scale, window) are used as given. Throws NoValidVol0 otherwise.
Vol0SearchResult Vol0Search(const WeightedGraph& graph, const NibbleParams& params,
                            double phi_accept, double vol0_max);

}  // namespace lgc
