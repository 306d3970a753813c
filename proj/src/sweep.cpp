#include "lgc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lgc/errors.hpp"
#include "lgc/summation.hpp"

namespace lgc {

double SweepProfile::PrefixConductance(std::size_t j) const {
  const double vol = prefix_volume[j];
  const double denom = std::min(vol, total_volume - vol);
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  return prefix_cut[j] / denom;
}

std::vector<VertexId> SweepProfile::Prefix(std::size_t j) const {
  return {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j + 1)};
}

SweepProfile BuildSweepProfile(const WeightedGraph& graph, const SparseMass& p) {
  if (p.empty()) throw DomainError("sweep needs a vector with nonempty support");
  SweepProfile prof;
  prof.total_volume = graph.total_volume();
  prof.total_mass = p.l1();

  const auto entries = p.entries();
  std::vector<std::size_t> idx(entries.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<double> value(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const VertexId u = entries[i].vertex;
    if (!graph.valid(u)) throw InputError("vector references unknown vertex");
    if (!(graph.degree(u) > 0.0)) {
      throw DomainError("sweep undefined at degree-0 vertex " + std::to_string(u));
    }
    value[i] = entries[i].mass / graph.degree(u);
  }
  // Entries are id-sorted, so a stable sort breaks ties by ascending id.
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return value[a] > value[b]; });

  const std::size_t k = idx.size();
  prof.order.resize(k);
  prof.normalized.resize(k);
  prof.prefix_volume.resize(k);
  prof.prefix_cut.resize(k);
  prof.prefix_mass.resize(k);

  std::vector<char> in(graph.vertex_count(), 0);
  CompensatedSum vol;
  CompensatedSum cut;
  CompensatedSum mass;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& e = entries[idx[j]];
    const VertexId u = e.vertex;
    double inside = 0.0;
    for (const Neighbor& n : graph.neighbors(u)) {
      if (in[n.id]) inside += n.weight;
    }
    in[u] = 1;
    vol += graph.degree(u);
    cut += graph.degree(u) - 2.0 * inside;
    mass += e.mass;
    prof.order[j] = u;
    prof.normalized[j] = value[idx[j]];
    prof.prefix_volume[j] = vol.value();
    prof.prefix_cut[j] = cut.value();
    prof.prefix_mass[j] = mass.value();
  }
  return prof;
}

SweepCut BestSweepCut(const WeightedGraph& graph, const SweepProfile& profile,
                      std::optional<double> volume_cap) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_j = profile.size();
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (volume_cap && profile.prefix_volume[j] > *volume_cap) break;
    const double phi = profile.PrefixConductance(j);
    if (phi < best) {
      best = phi;
      best_j = j;
    }
  }
  if (best_j == profile.size()) {
    throw DomainError("no sweep prefix has positive volume on both sides");
  }
  return {VertexSet(graph, profile.Prefix(best_j)), best, best_j + 1};
}

VertexSet ThresholdSet(const WeightedGraph& graph, const SparseMass& p, double c,
                       double vol0) {
  if (!(c > 0.0) || !(vol0 > 0.0)) {
    throw InputError("threshold set needs c > 0 and vol0 > 0");
  }
  std::vector<VertexId> ids;
  for (const auto& e : p.entries()) {
    if (e.mass >= c * graph.degree(e.vertex) / vol0) ids.push_back(e.vertex);
  }
  return VertexSet(graph, std::move(ids));
}

LovaszSimonovitsCurve::LovaszSimonovitsCurve(const SweepProfile& profile)
    : total_volume_(profile.total_volume) {
  xs_.reserve(profile.size() + 2);
  ys_.reserve(profile.size() + 2);
  xs_.push_back(0.0);
  ys_.push_back(0.0);
  for (std::size_t j = 0; j < profile.size(); ++j) {
    xs_.push_back(profile.prefix_volume[j]);
    ys_.push_back(profile.prefix_mass[j]);
  }
  if (xs_.back() < total_volume_) {
    xs_.push_back(total_volume_);
    ys_.push_back(ys_.back());
  }
}

double LovaszSimonovitsCurve::operator()(double x) const {
  if (!(x >= 0.0 && x <= total_volume_)) {
    throw InputError("curve argument outside [0, vol(V)]");
  }
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end()) return ys_.back();
  const std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
  const std::size_t lo = hi - 1;
  const double t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return ys_[lo] + t * (ys_[hi] - ys_[lo]);
}

double LovaszSimonovitsCurve::Slope(std::size_t i) const {
  return (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
}

}  // namespace lgc
