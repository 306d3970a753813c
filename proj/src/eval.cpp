#include "lgc/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lgc/errors.hpp"

namespace lgc {

ClusterReport ClusterMetrics(const WeightedGraph& graph, const VertexSet& s,
                             const VertexSet& a) {
  if (a.empty()) throw InputError("ground-truth set is empty");
  ClusterReport r;
  r.size_s = s.size();
  r.size_a = a.size();
  double vol_out = 0.0;
  for (VertexId u : s) {
    if (a.contains(u)) {
      ++r.intersection;
    } else {
      vol_out += graph.degree(u);
    }
  }
  double vol_miss = 0.0;
  for (VertexId u : a) {
    if (!s.contains(u)) vol_miss += graph.degree(u);
  }
  r.phi_a = Conductance(graph, a);
  if (s.empty()) {
    r.phi_s = std::numeric_limits<double>::quiet_NaN();
    r.precision_defined = false;
  } else {
    r.phi_s = Conductance(graph, s);
    r.precision = static_cast<double>(r.intersection) / static_cast<double>(r.size_s);
  }
  r.conductance_ratio = r.phi_s / r.phi_a;
  r.recall = static_cast<double>(r.intersection) / static_cast<double>(r.size_a);
  r.vol_out = vol_out / a.volume();
  r.vol_miss = vol_miss / a.volume();
  const std::size_t sym_diff = r.size_s + r.size_a - 2 * r.intersection;
  r.accuracy = 1.0 - static_cast<double>(sym_diff) / static_cast<double>(graph.vertex_count());
  return r;
}

MeanCi MeanWithCi94(const std::vector<double>& xs) {
  MeanCi out;
  out.n = xs.size();
  if (xs.empty()) return out;
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) return out;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  out.half_width = kZ94 * sd / std::sqrt(static_cast<double>(xs.size()));
  return out;
}

std::vector<double> DefaultAlphaGrid() {
  std::vector<double> grid(12);
  const double lo = std::log(0.001);
  const double hi = std::log(0.3);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / 11.0);
  }
  grid.front() = 0.001;
  grid.back() = 0.3;
  return grid;
}

BetaSweepResult BetaSweepExperiment(const BetaSweepConfig& config,
                                    const std::function<void(const BetaRunRecord&)>& on_run) {
  if (config.runs < 2) throw InputError("beta sweep needs at least two runs per point");
  if (config.alpha_grid.empty()) throw InputError("alpha grid is empty");
  BetaSweepResult out;
  for (std::size_t bi = 0; bi < config.betas.size(); ++bi) {
    const double beta = config.betas[bi];
    std::vector<double> ratios, accs, phis;
    BetaSweepRow row;
    row.beta = beta;
    for (std::size_t run = 0; run < config.runs; ++run) {
      BetaRunRecord rec;
      rec.beta = beta;
      rec.run = run;
      const std::uint64_t run_seed = DeriveSeed(DeriveSeed(config.rng_seed, bi), run);
      Experiment1Config gc = config.graph;
      gc.beta = beta;
      gc.seed = DeriveSeed(run_seed, 0);
      rec.graph_seed = gc.seed;
      const LabeledGraph lg = Experiment1Graph(gc);
      const VertexSet& a = lg.ground_truth;
      Rng pick(DeriveSeed(run_seed, 1));
      rec.seed_vertex = a.ids()[pick.Below(a.size())];
      rec.phi_a = Conductance(lg.graph, a);
      phis.push_back(rec.phi_a);

      std::optional<NibbleResult> best;
      std::string last_error;
      for (double alpha : config.alpha_grid) {
        NibbleParams np = config.nibble;
        np.seed = rec.seed_vertex;
        np.vol0 = a.volume();
        np.alpha_override = alpha;
        try {
          NibbleResult r = PageRankNibble(lg.graph, np);
          if (!best || r.conductance < best->conductance) best = std::move(r);
        } catch (const DomainError& e) {
          last_error = e.what();
        }
      }
      if (best) {
        const ClusterReport rep = ClusterMetrics(lg.graph, best->output_set, a);
        rec.ok = true;
        rec.alpha = best->alpha;
        rec.phi_s = rep.phi_s;
        rec.ratio = rep.conductance_ratio;
        rec.accuracy = rep.accuracy;
        rec.output_size = rep.size_s;
        ratios.push_back(rec.ratio);
        accs.push_back(rec.accuracy);
      } else {
        rec.error = last_error;
        ++row.failures;
      }
      if (on_run) on_run(rec);
      out.runs.push_back(std::move(rec));
    }
    row.ratio = MeanWithCi94(ratios);
    row.accuracy = MeanWithCi94(accs);
    row.phi_a = MeanWithCi94(phis);
    out.rows.push_back(row);
  }
  return out;
}

double SeedSweepResult::Fraction(const SeedThresholds& t) const {
  if (!(total_weight > 0.0)) return 0.0;
  double met = 0.0;
  for (const SeedOutcome& o : outcomes) {
    if (!o.ok) continue;
    const ClusterReport& r = o.report;
    if (r.vol_out <= t.vol_out && r.vol_miss <= t.vol_miss && r.phi_s <= t.phi) {
      met += o.weight;
    }
  }
  return met / total_weight;
}

SeedSweepResult SeedSweep(const WeightedGraph& graph, const VertexSet& a,
                          const SeedSweepConfig& config) {
  if (a.empty()) throw InputError("ground-truth set is empty");
  SeedSweepResult out;
  std::vector<std::pair<VertexId, double>> seeds;
  if (a.size() <= config.exhaustive_limit) {
    for (VertexId u : a) seeds.emplace_back(u, graph.degree(u));
  } else {
    out.sampled = true;
    std::vector<double> cumulative;
    double acc = 0.0;
    for (VertexId u : a) {
      acc += graph.degree(u);
      cumulative.push_back(acc);
    }
    Rng rng(config.rng_seed);
    for (std::size_t i = 0; i < config.sample_size; ++i) {
      const double x = rng.Uniform01() * acc;
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
      const std::size_t idx = std::min<std::size_t>(
          static_cast<std::size_t>(it - cumulative.begin()), a.size() - 1);
      seeds.emplace_back(a.ids()[idx], 1.0);
    }
  }
  for (const auto& [seed, weight] : seeds) {
    SeedOutcome o;
    o.seed = seed;
    o.weight = weight;
    out.total_weight += weight;
    NibbleParams np = config.nibble;
    np.seed = seed;
    try {
      const NibbleResult r = PageRankNibble(graph, np);
      o.report = ClusterMetrics(graph, r.output_set, a);
      o.ok = true;
    } catch (const DomainError& e) {
      o.error = e.what();
    }
    out.outcomes.push_back(std::move(o));
  }
  return out;
}

}  // namespace lgc
