#include "lgc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lgc/errors.hpp"
#include "lgc/pagerank.hpp"
#include "lgc/sweep.hpp"

namespace lgc {

using std::numbers::pi;

double ChainSpectrum::Eigenvalue(std::size_t k) const {
  const double c = std::cos(pi * static_cast<double>(k) / (2.0 * static_cast<double>(ell)));
  return c * c;
}

double ChainSpectrum::VectorEntry(std::size_t k, std::size_t u) const {
  const double deg = (u == 0 || u == ell) ? 1.0 : 2.0;
  return deg * std::cos(pi * static_cast<double>(k * u) / static_cast<double>(ell));
}

std::vector<double> ChainSpectrum::Vector(std::size_t k) const {
  std::vector<double> v(ell + 1);
  for (std::size_t u = 0; u <= ell; ++u) v[u] = VectorEntry(k, u);
  return v;
}

double ChainEigenCheck(std::size_t ell) {
  if (ell < 1) throw InputError("chain needs ell >= 1");
  const WeightedGraph g = Chain(ell);
  const ChainSpectrum spec{ell};
  double worst = 0.0;
  std::vector<double> out(ell + 1);
  for (std::size_t k = 0; k <= ell; ++k) {
    const std::vector<double> v = spec.Vector(k);
    std::fill(out.begin(), out.end(), 0.0);
    for (VertexId u = 0; u <= ell; ++u) {
      out[u] += 0.5 * v[u];
      const double share = 0.5 * v[u] / g.degree(u);
      for (const Neighbor& n : g.neighbors(u)) out[n.id] += share * n.weight;
    }
    const double lambda = spec.Eigenvalue(k);
    for (std::size_t u = 0; u <= ell; ++u) {
      worst = std::max(worst, std::abs(out[u] - lambda * v[u]));
    }
  }
  return worst;
}

double ChainOrthogonalityCheck(std::size_t ell) {
  if (ell < 1) throw InputError("chain needs ell >= 1");
  const ChainSpectrum spec{ell};
  std::vector<std::vector<double>> vs;
  for (std::size_t k = 0; k <= ell; ++k) vs.push_back(spec.Vector(k));
  const auto inner = [&](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t u = 0; u <= ell; ++u) {
      s += x[u] * y[u] / ((u == 0 || u == ell) ? 1.0 : 2.0);
    }
    return s;
  };
  std::vector<double> norms(ell + 1);
  for (std::size_t k = 0; k <= ell; ++k) norms[k] = std::sqrt(inner(vs[k], vs[k]));
  double worst = 0.0;
  for (std::size_t j = 0; j <= ell; ++j) {
    for (std::size_t k = j + 1; k <= ell; ++k) {
      worst = std::max(worst, std::abs(inner(vs[j], vs[k])) / (norms[j] * norms[k]));
    }
  }
  return worst;
}

const char* ToString(AppendixLemma lemma) {
  switch (lemma) {
    case AppendixLemma::kA1: return "A1";
    case AppendixLemma::kA2: return "A2";
    case AppendixLemma::kA3: return "A3";
    case AppendixLemma::kA4: return "A4";
  }
  return "?";
}

AppendixLemma ParseAppendixLemma(const std::string& text) {
  if (text == "A1" || text == "a1") return AppendixLemma::kA1;
  if (text == "A2" || text == "a2") return AppendixLemma::kA2;
  if (text == "A3" || text == "a3") return AppendixLemma::kA3;
  if (text == "A4" || text == "a4") return AppendixLemma::kA4;
  throw InputError("unknown lemma '" + text + "' (A1|A2|A3|A4)");
}

void AppendixBoundRequest::Validate() const {
  if (!(gamma > 0.0 && gamma <= 4.0)) throw InputError("gamma must lie in (0, 4]");
  if (ell < 2 || ell % 2 != 0) throw InputError("ell must be even and >= 2");
}

double AppendixBoundRequest::alpha() const {
  const double l = static_cast<double>(ell);
  return gamma / (l * l);
}

namespace {

double A1Paren(double g) { return 1.0 - 2.0 * g / (pi * pi / 4.0 + g) + 2.0 * g / (pi * pi + g); }
double A2Paren(double g) { return 1.0 - 2.0 * g / (pi * pi + g); }

}  // namespace

double AppendixBound(const AppendixBoundRequest& request) {
  request.Validate();
  const double l = static_cast<double>(request.ell);
  const double g = request.gamma;
  switch (request.lemma) {
    case AppendixLemma::kA1: return A1Paren(g) / (2.0 * l);
    case AppendixLemma::kA2: return A2Paren(g) / l;
    case AppendixLemma::kA3: return (1.0 + std::sqrt(g)) / l;
    case AppendixLemma::kA4: return std::sqrt(pi * g) / (2.0 * l);
  }
  return 0.0;
}

double ChainTruncationBound(double alpha, std::size_t m) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
  // h(x) = cosh(kx) / cosh(km) solves h = (1-alpha)(h/2 + (h(x-1) + h(x+1))/4)
  // with h(+-m) = 1, so h(0) is the chance of reaching distance m before the
  // walk stops. Walks that never get there agree on both chains.
  const double kappa = std::acosh((1.0 + alpha) / (1.0 - alpha));
  return 1.0 / std::cosh(kappa * static_cast<double>(m));
}

AppendixCheck VerifyAppendixLemma(const AppendixBoundRequest& request,
                                  double slack_constant) {
  request.Validate();
  if (!(slack_constant >= 0.0)) throw InputError("slack constant must be nonnegative");
  AppendixCheck out;
  out.request = request;
  out.bound = AppendixBound(request);
  const std::size_t ell = request.ell;
  const double l = static_cast<double>(ell);
  const double alpha = request.alpha();

  const auto chain_pr = [&](std::size_t length, std::size_t source, std::size_t at) {
    const WeightedGraph g = Chain(length);
    const auto pr = ExactPageRank(g, SparseMass::Indicator(static_cast<VertexId>(source)),
                                  alpha, 1e-12, ExactMethod::kSparseSolve);
    return pr[at];
  };

  switch (request.lemma) {
    case AppendixLemma::kA1:
      out.measured = chain_pr(ell, 0, ell);
      out.slacked_bound = (A1Paren(request.gamma) + slack_constant / (l * l)) / (2.0 * l);
      out.margin = out.slacked_bound - out.measured;
      break;
    case AppendixLemma::kA2:
      out.measured = chain_pr(ell, 0, ell / 2);
      out.slacked_bound = (A2Paren(request.gamma) - slack_constant / (l * l)) / l;
      out.margin = out.measured - out.slacked_bound;
      break;
    case AppendixLemma::kA3:
      out.measured = chain_pr(ell, ell / 2, ell / 2);
      out.slacked_bound = (1.0 + std::sqrt(request.gamma) + slack_constant / l) / l;
      out.margin = out.slacked_bound - out.measured;
      break;
    case AppendixLemma::kA4: {
      const std::size_t length = 20 * ell;
      out.measured = chain_pr(length, length / 2, length / 2);
      out.truncation = ChainTruncationBound(alpha, length / 2);
      out.slacked_bound = out.bound - slack_constant / (l * l);
      out.margin = (out.measured - out.truncation) - out.slacked_bound;
      break;
    }
  }
  out.pass = out.margin >= 0.0;
  return out;
}

double LemmaA5C0(double gamma) {
  if (!(gamma > 0.0 && gamma <= 4.0)) throw InputError("gamma must lie in (0, 4]");
  const double c2 = 1.0 - A1Paren(gamma) / A2Paren(gamma);
  const double c1 = c2 / 2.0;
  return 2.0 / c1;
}

namespace {

std::vector<double> HardPageRank(const HardInstance& instance, double gamma) {
  const double l = static_cast<double>(instance.mult.ell);
  const double alpha = gamma / (l * l);
  const WeightedGraph& g = instance.labeled.graph;
  return ExactPageRank(g, SparseMass::Indicator(instance.a), alpha, 1e-12,
                       ExactMethod::kSparseSolve);
}

Lemma51Check Compare(const HardInstance& instance, const std::vector<double>& pr) {
  const WeightedGraph& g = instance.labeled.graph;
  Lemma51Check out;
  out.normalized_d = pr[instance.d] / g.degree(instance.d);
  out.normalized_c = pr[instance.c] / g.degree(instance.c);
  out.pass = out.normalized_d > out.normalized_c;
  return out;
}

}  // namespace

Lemma51Check VerifyLemma51(const HardInstance& instance, double gamma) {
  if (!(gamma > 0.0 && gamma <= 4.0)) throw InputError("gamma must lie in (0, 4]");
  if (!(instance.mult.bridge > 0.0)) {
    // d is unreachable from a, so pr_a(d) = 0.
    Lemma51Check out;
    const auto pr = HardPageRank(instance, gamma);
    out.normalized_c = pr[instance.c] / instance.labeled.graph.degree(instance.c);
    out.pass = false;
    return out;
  }
  return Compare(instance, HardPageRank(instance, gamma));
}

SweepScan HardInstanceSweepScan(const HardInstance& instance, double gamma) {
  if (!(gamma > 0.0 && gamma <= 4.0)) throw InputError("gamma must lie in (0, 4]");
  const WeightedGraph& g = instance.labeled.graph;
  std::vector<double> pr = HardPageRank(instance, gamma);
  SweepScan out;
  out.lemma51 = Compare(instance, pr);
  // Solver round-off can leave tiny negative entries far from a.
  for (double& x : pr) x = std::max(x, 0.0);
  const SweepProfile prof = BuildSweepProfile(g, SparseMass::FromDense(pr));
  const SweepCut cut = BestSweepCut(g, prof);
  out.min_phi = cut.conductance;
  out.prefix_length = cut.prefix_length;
  out.phi_a = Conductance(g, instance.labeled.ground_truth);
  out.ratio = out.min_phi / (out.phi_a * static_cast<double>(instance.mult.ell));
  out.position_c = prof.size();
  out.position_d = prof.size();
  for (std::size_t j = 0; j < prof.size(); ++j) {
    if (prof.order[j] == instance.c) out.position_c = j;
    if (prof.order[j] == instance.d) out.position_d = j;
  }
  out.c_without_d = out.position_c < out.position_d;
  return out;
}

HardInstanceSpec HardSpecFor(std::size_t ell, double phi_ell2, double gamma,
                             double bridge_weight) {
  const double l = static_cast<double>(ell);
  HardInstanceSpec spec;
  spec.ell = ell;
  spec.phi = phi_ell2 / (l * l);
  spec.n = bridge_weight / spec.phi;
  spec.c0 = LemmaA5C0(gamma);
  return spec;
}

HardGridPoint EvaluateHardPoint(std::size_t ell, double phi_ell2, double gamma, double anchor,
                                double bridge_weight) {
  HardGridPoint pt;
  pt.ell = ell;
  pt.phi_ell2 = phi_ell2;
  pt.gamma = gamma;
  pt.spec = HardSpecFor(ell, phi_ell2, gamma, bridge_weight);
  try {
    const HardInstance h = MakeHardInstance(pt.spec);
    pt.max_drift = h.max_drift();
    pt.scan = HardInstanceSweepScan(h, gamma);
    pt.lemma51 = pt.scan.lemma51.pass;
    pt.sweep_bound = pt.scan.ratio >= anchor;
  } catch (const InputError& e) {
    pt.error = e.what();
  }
  return pt;
}

std::vector<HardGridPoint> HardInstanceGridSearch(const HardGridOptions& options) {
  std::vector<HardGridPoint> out;
  std::vector<double> phis = options.phi_ell2;
  std::sort(phis.begin(), phis.end(), std::greater<>());
  std::vector<std::size_t> ells = options.ells;
  std::sort(ells.begin(), ells.end());
  std::vector<double> gammas = options.gammas;
  std::sort(gammas.begin(), gammas.end());
  for (std::size_t ell : ells) {
    for (double pl : phis) {
      for (double g : gammas) {
        out.push_back(EvaluateHardPoint(ell, pl, g, options.anchor, options.bridge_weight));
        if (options.stop_at_first_pass && out.back().pass()) return out;
      }
    }
  }
  return out;
}

}  // namespace lgc
