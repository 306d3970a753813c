#include "lgc/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lgc/errors.hpp"

namespace lgc {
namespace {

InducedSubgraph ConnectedInduce(const WeightedGraph& graph, const VertexSet& set) {
  if (set.size() < 2) throw InputError("connectivity needs a set of at least two vertices");
  InducedSubgraph sub = Induce(graph, set);
  if (!IsConnected(sub.graph)) {
    throw DomainError("induced subgraph is disconnected (lambda = 0)");
  }
  return sub;
}

// Rows chi_v W^t for every start vertex v of `g`, advanced one step at a time.
class WalkRows {
 public:
  explicit WalkRows(const WeightedGraph& g)
      : g_(g), k_(g.vertex_count()), rows_(k_ * k_, 0.0), next_(k_ * k_, 0.0) {
    for (std::size_t v = 0; v < k_; ++v) rows_[v * k_ + v] = 1.0;
    pi_.resize(k_);
    for (VertexId u = 0; u < k_; ++u) pi_[u] = g.degree(u) / g.total_volume();
  }

  void Step() {
    for (std::size_t v = 0; v < k_; ++v) {
      const double* in = &rows_[v * k_];
      double* out = &next_[v * k_];
      for (std::size_t u = 0; u < k_; ++u) out[u] = 0.5 * in[u];
      for (VertexId x = 0; x < k_; ++x) {
        if (in[x] == 0.0) continue;
        const double share = 0.5 * in[x] / g_.degree(x);
        for (const Neighbor& n : g_.neighbors(x)) out[n.id] += share * n.weight;
      }
    }
    rows_.swap(next_);
  }

  double Distance() const {
    double worst = 0.0;
    for (std::size_t v = 0; v < k_; ++v) {
      for (std::size_t u = 0; u < k_; ++u) {
        worst = std::max(worst, std::abs(rows_[v * k_ + u] - pi_[u]) / pi_[u]);
      }
    }
    return worst;
  }

 private:
  const WeightedGraph& g_;
  std::size_t k_;
  std::vector<double> rows_;
  std::vector<double> next_;
  std::vector<double> pi_;
};

double Clamp01(double x) {
  if (!(x >= 0.0)) return 0.0;
  return std::min(x, 1.0);
}

}  // namespace

SpectralGapResult SpectralGap(const WeightedGraph& graph, const VertexSet& set,
                              GapMethod method, double tolerance) {
  const InducedSubgraph sub = ConnectedInduce(graph, set);
  const bool dense = method == GapMethod::kDense ||
                     (method == GapMethod::kAuto && set.size() <= kDenseGapLimit);
  SpectralGapResult out;
  out.dense = dense;
  if (dense) {
    out.lambda = 1.0 - SecondLazyEigenpairDense(sub.graph).value;
  } else {
    PowerIterationOptions opts;
    opts.tolerance = tolerance;
    const LazyEigenpair pair = SecondLazyEigenpairPower(sub.graph, opts);
    out.lambda = 1.0 - pair.value;
    out.iterations = pair.iterations;
    out.converged = pair.converged;
  }
  out.lambda = Clamp01(out.lambda);
  return out;
}

MixingTimeResult MixingTime(const WeightedGraph& graph, const VertexSet& set,
                            std::int64_t cap) {
  if (set.size() < 2) throw InputError("mixing time needs a set of at least two vertices");
  const InducedSubgraph sub = Induce(graph, set);
  MixingTimeResult out;
  if (!IsConnected(sub.graph)) {
    out.exceeded = true;
    out.disconnected = true;
    return out;
  }
  if (cap <= 0) cap = 100 * static_cast<std::int64_t>(set.size() * set.size());

  WalkRows walk(sub.graph);
  double prev = walk.Distance();
  for (std::int64_t t = 1; t <= cap; ++t) {
    walk.Step();
    const double d = walk.Distance();
    if (d <= 0.5) {
      out.steps = t;
      out.distance = d;
      out.previous_distance = prev;
      return out;
    }
    prev = d;
  }
  out.exceeded = true;
  out.distance = prev;
  return out;
}

double RelativePointwiseDistance(const WeightedGraph& graph, const VertexSet& set,
                                 std::int64_t t) {
  const InducedSubgraph sub = ConnectedInduce(graph, set);
  WalkRows walk(sub.graph);
  for (std::int64_t i = 0; i < t; ++i) walk.Step();
  return walk.Distance();
}

std::int64_t MixingTimeEstimate(const WeightedGraph& graph, const VertexSet& set,
                                double lambda) {
  if (!(lambda > 0.0)) throw DomainError("mixing estimate needs lambda > 0");
  const InducedSubgraph sub = Induce(graph, set);
  double pi_min = 1.0;
  for (VertexId u = 0; u < sub.graph.vertex_count(); ++u) {
    pi_min = std::min(pi_min, sub.graph.degree(u) / sub.graph.total_volume());
  }
  if (!(pi_min > 0.0)) throw DomainError("mixing estimate needs positive degrees");
  const double t = std::ceil(std::log(2.0 / pi_min) / lambda);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(t));
}

const char* ToString(ConnDefinition def) {
  switch (def) {
    case ConnDefinition::kMix: return "mix";
    case ConnDefinition::kLambda: return "lambda";
    case ConnDefinition::kPhiS: return "phis";
  }
  return "?";
}

ConnDefinition ParseConnDefinition(const std::string& text) {
  if (text == "mix") return ConnDefinition::kMix;
  if (text == "lambda") return ConnDefinition::kLambda;
  if (text == "phis" || text == "phiS") return ConnDefinition::kPhiS;
  throw InputError("unknown conn definition '" + text + "' (mix|lambda|phis)");
}

double ConnectivityReport::conn() const {
  switch (definition) {
    case ConnDefinition::kMix: return conn_mix;
    case ConnDefinition::kLambda: return conn_lambda;
    case ConnDefinition::kPhiS: return conn_phi_s;
  }
  return 0.0;
}

double ConnectivityReport::gap() const {
  switch (definition) {
    case ConnDefinition::kMix: return gap_mix;
    case ConnDefinition::kLambda: return gap_lambda;
    case ConnDefinition::kPhiS: return gap_phi_s;
  }
  return 0.0;
}

ConnectivityReport ConnAndGap(const WeightedGraph& graph, const VertexSet& set,
                              ConnDefinition definition, std::optional<double> phi_of_set,
                              const ConnectivityOptions& options) {
  if (set.empty() || set.size() == graph.vertex_count()) {
    throw InputError("connectivity report needs a proper nonempty set");
  }
  ConnectivityReport r;
  r.definition = definition;
  r.volume = set.volume();
  r.phi_a = phi_of_set ? *phi_of_set : Conductance(graph, set);
  r.lambda = SpectralGap(graph, set, options.gap_method).lambda;

  if (set.size() <= options.exact_mixing_limit) {
    const MixingTimeResult mix = MixingTime(graph, set, options.mixing_cap);
    r.tau_mix = mix.steps;
    r.tau_mix_exceeded = mix.exceeded;
  } else {
    r.tau_mix = MixingTimeEstimate(graph, set, r.lambda);
    r.tau_mix_estimated = true;
  }

  const auto mode = set.size() <= kExactSetConductanceCap ? SetConductanceMode::kExact
                                                          : SetConductanceMode::kSpectralSweep;
  const SetConductanceResult phis = SetConductance(graph, set, mode);
  r.phi_s = phis.value;
  r.phi_s_exact = phis.exact;
  r.phi_s_disconnected = phis.disconnected;

  const double log_vol = std::log(r.volume);
  const double inv_log = log_vol > 0.0 ? 1.0 / log_vol : std::numeric_limits<double>::infinity();
  r.conn_mix = r.tau_mix ? Clamp01(1.0 / static_cast<double>(*r.tau_mix)) : 0.0;
  r.conn_lambda = Clamp01(r.lambda * inv_log);
  r.conn_phi_s = Clamp01(r.phi_s * r.phi_s * inv_log);
  if (r.phi_a > 0.0) {
    r.gap_mix = r.conn_mix / r.phi_a;
    r.gap_lambda = r.conn_lambda / r.phi_a;
    r.gap_phi_s = r.conn_phi_s / r.phi_a;
  } else {
    const double inf = std::numeric_limits<double>::infinity();
    r.gap_mix = r.gap_lambda = r.gap_phi_s = inf;
  }
  return r;
}

}  // namespace lgc
