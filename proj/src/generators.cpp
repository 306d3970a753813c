#include "lgc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "lgc/errors.hpp"

namespace lgc {

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::Below needs a positive bound");
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t PairKey(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

}  // namespace

WeightedGraph WattsStrogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
  if (k % 2 != 0 || k == 0 || k >= n) {
    throw InputError("Watts-Strogatz needs an even K with 0 < K < n");
  }
  if (!(beta >= 0.0 && beta <= 1.0)) throw InputError("beta must lie in [0, 1]");
  Rng rng(seed);
  std::unordered_set<std::uint64_t> present;
  std::vector<std::size_t> degree(n, k);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n * k / 2);
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t u = 0; u < n; ++u) {
      const auto a = static_cast<VertexId>(u);
      const auto b = static_cast<VertexId>((u + j) % n);
      edges.emplace_back(a, b);
      present.insert(PairKey(a, b));
    }
  }
  // Rewire in lattice order: all offset-1 edges, then offset 2, ...
  for (auto& [u, v] : edges) {
    if (!rng.Bernoulli(beta)) continue;
    if (degree[u] >= n - 1) continue;
    VertexId w;
    do {
      w = static_cast<VertexId>(rng.Below(n));
    } while (w == u || present.count(PairKey(u, w)));
    present.erase(PairKey(u, v));
    present.insert(PairKey(u, w));
    --degree[v];
    ++degree[w];
    v = w;
  }
  std::vector<WeightedEdge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) out.push_back({u, v, 1.0});
  return WeightedGraph::FromEdges(n, out);
}

WeightedGraph ErdosRenyi(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::vector<WeightedEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(p)) edges.push_back({u, v, 1.0});
    }
  }
  return WeightedGraph::FromEdges(n, edges);
}

void Experiment1Config::Validate() const {
  for (double p : {p_bb, p_cc, p_ab, p_ac, p_bc}) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probabilities must lie in [0, 1]");
  }
  if (ws_mean_degree % 2 != 0 || ws_mean_degree >= size_a) {
    throw InputError("Watts-Strogatz mean degree must be even and < |A|");
  }
  if (!(beta >= 0.0 && beta <= 1.0)) throw InputError("beta must lie in [0, 1]");
}

LabeledGraph Experiment1Graph(const Experiment1Config& config) {
  config.Validate();
  const std::size_t na = config.size_a;
  const std::size_t nb = config.size_b;
  const std::size_t nc = config.size_c;
  const std::size_t total = na + nb + nc;

  std::vector<WeightedEdge> edges =
      WattsStrogatz(na, config.ws_mean_degree, config.beta, DeriveSeed(config.seed, 0))
          .Edges();
  Rng rng(DeriveSeed(config.seed, 1));
  const auto block = [&](std::size_t lo1, std::size_t hi1, std::size_t lo2, std::size_t hi2,
                         double p, bool same) {
    for (std::size_t u = lo1; u < hi1; ++u) {
      for (std::size_t v = same ? u + 1 : lo2; v < hi2; ++v) {
        if (rng.Bernoulli(p)) {
          edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), 1.0});
        }
      }
    }
  };
  const std::size_t b0 = na, c0 = na + nb;
  block(b0, c0, b0, c0, config.p_bb, true);
  block(c0, total, c0, total, config.p_cc, true);
  block(0, na, b0, c0, config.p_ab, false);
  block(0, na, c0, total, config.p_ac, false);
  block(b0, c0, c0, total, config.p_bc, false);

  LabeledGraph out;
  out.graph = WeightedGraph::FromEdges(total, edges);
  std::vector<VertexId> a(na);
  for (VertexId i = 0; i < na; ++i) a[i] = i;
  out.ground_truth = VertexSet(out.graph, std::move(a));
  out.labels.resize(total);
  for (std::size_t u = 0; u < total; ++u) out.labels[u] = u < na ? "A" : u < c0 ? "B" : "C";
  return out;
}

LabeledGraph TwoCliques(std::size_t k, std::size_t bridges) {
  if (k < 2 || bridges > k) throw InputError("two cliques need k >= 2 and bridges <= k");
  std::vector<WeightedEdge> edges;
  for (std::size_t side = 0; side < 2; ++side) {
    const auto off = static_cast<VertexId>(side * k);
    for (VertexId u = 0; u < k; ++u) {
      for (VertexId v = u + 1; v < k; ++v) edges.push_back({off + u, off + v, 1.0});
    }
  }
  for (VertexId i = 0; i < bridges; ++i) {
    edges.push_back({i, static_cast<VertexId>(k + i), 1.0});
  }
  LabeledGraph out;
  out.graph = WeightedGraph::FromEdges(2 * k, edges);
  std::vector<VertexId> a(k);
  for (VertexId i = 0; i < k; ++i) a[i] = i;
  out.ground_truth = VertexSet(out.graph, std::move(a));
  out.labels.resize(2 * k);
  for (std::size_t u = 0; u < 2 * k; ++u) out.labels[u] = u < k ? "A" : "B";
  return out;
}

double HardInstance::max_drift() const {
  return std::max({drift_top, drift_bridge, drift_bottom_edge, drift_bottom_length});
}

HardInstanceMultiplicities ResolveHardInstance(const HardInstanceSpec& spec,
                                               double* drifts) {
  if (spec.ell < 4 || spec.ell % 2 != 0) throw InputError("ell must be even and >= 4");
  if (!(spec.n > 0.0) || !(spec.phi > 0.0) || !(spec.c0 > 0.0)) {
    throw InputError("n, phi and c0 must be positive");
  }
  const double ell = static_cast<double>(spec.ell);
  const double targets[4] = {spec.n / ell, spec.phi * spec.n, spec.phi * spec.n * ell / spec.c0,
                             spec.c0 / (spec.phi * ell)};
  const char* names[4] = {"top edge n/ell", "bridge phi n", "bottom edge phi n ell / c0",
                          "bottom length c0 / (phi ell)"};
  double resolved[4];
  double drift[4];
  for (int i = 0; i < 4; ++i) {
    resolved[i] = std::max(1.0, std::round(targets[i]));
    drift[i] = std::abs(resolved[i] - targets[i]) / targets[i];
    if (drift[i] > 0.01) {
      std::ostringstream msg;
      msg << "hard instance: " << names[i] << " = " << targets[i] << " rounds to "
          << resolved[i] << " (drift " << 100.0 * drift[i]
          << "% > 1%); try n = " << spec.n * std::ceil(100.0 / std::max(targets[i], 1e-300))
          << " or adjust phi/c0 so every multiplicity is >= 100";
      throw InputError(msg.str());
    }
  }
  if (drifts) std::copy(drift, drift + 4, drifts);
  HardInstanceMultiplicities m;
  m.ell = spec.ell;
  m.top_edge = resolved[0];
  m.bridge = resolved[1];
  m.bottom_edge = resolved[2];
  m.bottom_length = static_cast<std::size_t>(resolved[3]);
  return m;
}

HardInstance BuildHardInstance(const HardInstanceMultiplicities& mult) {
  if (mult.ell < 4 || mult.ell % 2 != 0) throw InputError("ell must be even and >= 4");
  if (!(mult.top_edge > 0.0) || !(mult.bottom_edge > 0.0) || !(mult.bridge >= 0.0) ||
      mult.bottom_length < 1) {
    throw InputError("hard instance multiplicities must be positive (bridge may be 0)");
  }
  HardInstance h;
  h.mult = mult;
  const auto ell = static_cast<VertexId>(mult.ell);
  h.a = 0;
  h.b = ell / 2;
  h.c = ell;
  h.d = ell + 1;
  h.e = h.d + static_cast<VertexId>(mult.bottom_length);
  const std::size_t total = static_cast<std::size_t>(h.e) + 1;

  std::vector<WeightedEdge> edges;
  for (VertexId u = 0; u < ell; ++u) edges.push_back({u, u + 1, mult.top_edge});
  edges.push_back({h.b, h.d, mult.bridge});
  for (VertexId u = h.d; u < h.e; ++u) edges.push_back({u, u + 1, mult.bottom_edge});

  h.labeled.graph = WeightedGraph::FromEdges(total, edges);
  std::vector<VertexId> top(mult.ell + 1);
  for (VertexId i = 0; i <= ell; ++i) top[i] = i;
  h.labeled.ground_truth = VertexSet(h.labeled.graph, std::move(top));
  h.labeled.labels.assign(total, "bottom");
  for (VertexId i = 0; i <= ell; ++i) h.labeled.labels[i] = "top";
  h.labeled.labels[h.a] = "a";
  h.labeled.labels[h.b] = "b";
  h.labeled.labels[h.c] = "c";
  h.labeled.labels[h.d] = "d";
  h.labeled.labels[h.e] = "e";
  return h;
}

HardInstance MakeHardInstance(const HardInstanceSpec& spec) {
  double drift[4];
  HardInstance h = BuildHardInstance(ResolveHardInstance(spec, drift));
  h.drift_top = drift[0];
  h.drift_bridge = drift[1];
  h.drift_bottom_edge = drift[2];
  h.drift_bottom_length = drift[3];
  return h;
}

WeightedGraph Chain(std::size_t ell) {
  if (ell < 1) throw InputError("chain needs ell >= 1");
  std::vector<WeightedEdge> edges;
  edges.reserve(ell);
  for (VertexId u = 0; u < ell; ++u) edges.push_back({u, u + 1, 1.0});
  return WeightedGraph::FromEdges(ell + 1, edges);
}

KnnResult KnnGraph(const std::vector<std::vector<double>>& points, std::size_t k,
                   double sigma_factor) {
  const std::size_t m = points.size();
  if (k < 1) throw InputError("k must be positive");
  if (m < k + 1) throw InputError("k-NN graph needs at least k + 1 points");
  if (!(sigma_factor > 0.0)) throw InputError("sigma factor must be positive");
  const std::size_t dim = points[0].size();
  for (const auto& p : points) {
    if (p.size() != dim) throw InputError("points have different dimensions");
  }

  std::vector<std::vector<std::pair<VertexId, double>>> near(m);
  std::vector<double> dist(m);
  std::vector<double> scratch;
  double kth_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double s = 0.0;
      for (std::size_t t = 0; t < dim; ++t) {
        const double diff = points[i][t] - points[j][t];
        s += diff * diff;
      }
      dist[j] = s;
    }
    scratch.clear();
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) scratch.push_back(dist[j]);
    }
    std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     scratch.end());
    const double kth = scratch[k - 1];
    kth_sum += kth;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i && dist[j] <= kth) near[i].emplace_back(static_cast<VertexId>(j), dist[j]);
    }
  }
  KnnResult out;
  out.r = kth_sum / static_cast<double>(m);
  if (!(out.r > 0.0)) throw DomainError("k-NN graph: mean k-th neighbor distance is 0");
  out.sigma = sigma_factor * out.r;

  std::vector<std::pair<std::uint64_t, double>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [j, d2] : near[i]) {
      pairs.emplace_back(PairKey(static_cast<VertexId>(i), j), d2);
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].first == pairs[i - 1].first) continue;
    const auto u = static_cast<VertexId>(pairs[i].first >> 32);
    const auto v = static_cast<VertexId>(pairs[i].first & 0xffffffffULL);
    edges.push_back({u, v, std::exp(-pairs[i].second / out.sigma)});
  }
  out.graph = WeightedGraph::FromEdges(m, edges);
  return out;
}

}  // namespace lgc
