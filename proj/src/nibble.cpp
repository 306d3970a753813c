#include "lgc/nibble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lgc/errors.hpp"
#include "lgc/sweep.hpp"

namespace lgc {

double NibbleParams::Alpha() const {
  if (alpha_override) return *alpha_override;
  return std::min(alpha_scale * conn, 1.0 / 9.0);
}

double NibbleParams::Epsilon() const {
  if (epsilon_override) return *epsilon_override;
  return 1.0 / (10.0 * vol0);
}

void NibbleParams::Validate() const {
  if (!(conn > 0.0 && conn <= 1.0)) throw InputError("conn must lie in (0, 1]");
  if (!(vol0 > 0.0) || !std::isfinite(vol0)) throw InputError("vol0 must be positive");
  if (!(alpha_scale > 0.0) || !std::isfinite(alpha_scale)) {
    throw InputError("alpha scale must be positive");
  }
  if (!(c_min > 0.0 && c_min < c_max) || !std::isfinite(c_max)) {
    throw InputError("c-window needs 0 < c_min < c_max");
  }
  PageRankParams{Alpha(), Epsilon()}.Validate();
}

const char* ToString(NibbleMode mode) {
  return mode == NibbleMode::kGap ? "gap" : "classic";
}

NibbleResult PageRankNibble(const WeightedGraph& graph, const NibbleParams& params) {
  params.Validate();
  if (!graph.valid(params.seed)) throw InputError("seed vertex is not in the graph");
  if (!(graph.degree(params.seed) > 0.0)) {
    throw DomainError("seed vertex has degree 0");
  }

  NibbleResult out;
  out.params = params;
  out.alpha = params.Alpha();
  out.epsilon = params.Epsilon();
  if (params.vol0 > graph.total_volume() / 2.0) {
    out.warnings.push_back("vol0 exceeds half the total volume");
  }

  const auto apr = ApproximatePageRank(graph, SparseMass::Indicator(params.seed),
                                       {out.alpha, out.epsilon});
  out.stats = apr.stats;
  if (apr.p.empty()) {
    throw NoCandidateCut("approximate PageRank is zero; no threshold set in the c-window");
  }

  const SweepProfile prof = BuildSweepProfile(graph, apr.p);
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_j = prof.size();
  for (std::size_t j = 0; j < prof.size(); ++j) {
    const double value = prof.normalized[j] * params.vol0;
    const double next = j + 1 < prof.size() ? prof.normalized[j + 1] * params.vol0 : 0.0;
    if (value < params.c_min) break;
    if (!(next < params.c_max) || !(next < value)) continue;
    ++out.candidates;
    const double phi = prof.PrefixConductance(j);
    if (phi < best) {
      best = phi;
      best_j = j;
    }
  }
  if (best_j == prof.size()) {
    std::ostringstream msg;
    msg << "no candidate cut: no threshold set with c in [" << params.c_min << ", "
        << params.c_max << "] has a nonempty complement (vol0=" << params.vol0
        << ", alpha=" << out.alpha << ")";
    throw NoCandidateCut(msg.str());
  }
  out.output_set = VertexSet(graph, prof.Prefix(best_j));
  out.conductance = Conductance(graph, out.output_set);
  return out;
}

AutoNibbleResult NibbleAuto(const WeightedGraph& graph, const NibbleParams& gap_params,
                            double phi_target, double classic_alpha_scale) {
  if (!(phi_target > 0.0 && phi_target < 1.0)) {
    throw InputError("phi target must lie in (0, 1)");
  }
  if (!(classic_alpha_scale > 0.0)) throw InputError("classic alpha scale must be positive");

  AutoNibbleResult out;
  NibbleParams gap = gap_params;
  gap.alpha_override.reset();
  NibbleParams classic = gap_params;
  classic.alpha_override = std::min(phi_target * classic_alpha_scale, 1.0);
  // Same epsilon in both modes.
  classic.epsilon_override = gap.epsilon_override;

  try {
    out.gap = PageRankNibble(graph, gap);
    out.gap->mode = NibbleMode::kGap;
  } catch (const DomainError& e) {
    out.gap_error = e.what();
  }
  try {
    out.classic = PageRankNibble(graph, classic);
    out.classic->mode = NibbleMode::kClassic;
  } catch (const DomainError& e) {
    out.classic_error = e.what();
  }

  if (!out.gap && !out.classic) {
    throw DomainError("gap mode: " + out.gap_error + "; classic mode: " + out.classic_error);
  }
  if (out.gap && (!out.classic || out.gap->conductance <= out.classic->conductance)) {
    out.best = *out.gap;
  } else {
    out.best = *out.classic;
  }
  return out;
}

Vol0SearchResult Vol0Search(const WeightedGraph& graph, const NibbleParams& params,
                            double phi_accept, double vol0_max) {
  if (!(vol0_max >= 1.0)) throw InputError("vol0 cap must be at least 1");
  if (!(phi_accept >= 0.0)) throw InputError("phi accept must be nonnegative");

  Vol0SearchResult out;
  double best = std::numeric_limits<double>::infinity();
  for (double vol0 = 1.0; vol0 <= vol0_max; vol0 *= 2.0) {
    NibbleParams run = params;
    run.vol0 = vol0;
    try {
      NibbleResult r = PageRankNibble(graph, run);
      out.attempts.emplace_back(vol0, r.conductance);
      best = std::min(best, r.conductance);
      if (r.conductance <= phi_accept) {
        out.result = std::move(r);
        out.vol0 = vol0;
        return out;
      }
    } catch (const NoCandidateCut&) {
      out.attempts.emplace_back(vol0, std::numeric_limits<double>::infinity());
    }
  }
  std::ostringstream msg;
  msg << "no valid vol0 up to " << vol0_max << " (phi accept " << phi_accept
      << ", best phi " << best << ")";
  throw NoValidVol0(msg.str(), best);
}

}  // namespace lgc
