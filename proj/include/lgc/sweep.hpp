#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/pagerank.hpp"

namespace lgc {

// Vertices of supp(p) ordered by p(u)/deg(u) descending (ties: ascending id)
// together with the running volume, cut and mass of every prefix. Index j
// describes the prefix of length j + 1.
struct SweepProfile {
  std::vector<VertexId> order;
  std::vector<double> normalized;  // p(u) / deg(u) along `order`
  std::vector<double> prefix_volume;
  std::vector<double> prefix_cut;
  std::vector<double> prefix_mass;
  double total_volume = 0.0;
  double total_mass = 0.0;

  std::size_t size() const { return order.size(); }
  // +inf when one side of the prefix has zero volume.
  double PrefixConductance(std::size_t j) const;
  // Vertices of the prefix with j + 1 members.
  std::vector<VertexId> Prefix(std::size_t j) const;
};

SweepProfile BuildSweepProfile(const WeightedGraph& graph, const SparseMass& p);

struct SweepCut {
  VertexSet set;
  double conductance = 0.0;
  std::size_t prefix_length = 0;
};

// Minimum-conductance proper prefix, optionally restricted to prefixes with
// volume <= volume_cap. Ties go to the shortest prefix.
SweepCut BestSweepCut(const WeightedGraph& graph, const SweepProfile& profile,
                      std::optional<double> volume_cap = std::nullopt);

// {u in supp(p) : p(u) >= c deg(u) / vol0}.
VertexSet ThresholdSet(const WeightedGraph& graph, const SparseMass& p, double c,
                       double vol0);

// Piecewise-linear Lovasz-Simonovits curve p[x] through (0, 0) and
// (vol(S_j), p(S_j)); flat at ||p||_1 past the support.
class LovaszSimonovitsCurve {
 public:
  explicit LovaszSimonovitsCurve(const SweepProfile& profile);

  // x must lie in [0, total_volume]; InputError otherwise.
  double operator()(double x) const;

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  double total_volume() const { return total_volume_; }
  // Slope of segment i (between breakpoints i and i+1).
  double Slope(std::size_t i) const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  double total_volume_;
};

inline LovaszSimonovitsCurve LsCurve(const SweepProfile& profile) {
  return LovaszSimonovitsCurve(profile);
}

}  // namespace lgc
