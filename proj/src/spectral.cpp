#include "lgc/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "lgc/errors.hpp"

namespace lgc {
namespace {

std::vector<double> InverseSqrtDegrees(const WeightedGraph& graph) {
  if (graph.vertex_count() < 2) {
    throw InputError("spectral routines need at least two vertices");
  }
  std::vector<double> out(graph.vertex_count());
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    if (!(graph.degree(u) > 0.0)) {
      throw DomainError("lazy walk undefined at degree-0 vertex " +
                        std::to_string(u));
    }
    out[u] = 1.0 / std::sqrt(graph.degree(u));
  }
  return out;
}

void ProjectOut(std::vector<double>& x, const std::vector<double>& unit) {
  double dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * unit[i];
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= dot * unit[i];
}

double Normalize(std::vector<double>& x) {
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& v : x) v /= norm;
  }
  return norm;
}

}  // namespace

LazyEigenpair SecondLazyEigenpairDense(const WeightedGraph& graph) {
  const std::vector<double> isd = InverseSqrtDegrees(graph);
  const auto k = static_cast<Eigen::Index>(graph.vertex_count());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    m(u, u) = 0.5;
    for (const Neighbor& n : graph.neighbors(u)) {
      m(u, n.id) = 0.5 * n.weight * isd[u] * isd[n.id];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw DomainError("dense eigensolve did not converge");
  }
  LazyEigenpair out;
  out.value = solver.eigenvalues()(k - 2);
  out.vector.resize(graph.vertex_count());
  for (Eigen::Index i = 0; i < k; ++i) {
    out.vector[i] = solver.eigenvectors()(i, k - 2);
  }
  return out;
}

LazyEigenpair SecondLazyEigenpairPower(const WeightedGraph& graph,
                                       const PowerIterationOptions& options) {
  const std::vector<double> isd = InverseSqrtDegrees(graph);
  const std::size_t k = graph.vertex_count();

  std::vector<double> top(k);
  for (std::size_t i = 0; i < k; ++i) top[i] = 1.0 / isd[i];
  Normalize(top);

  std::mt19937_64 rng(options.rng_seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> x(k);
  for (double& v : x) v = unif(rng);
  ProjectOut(x, top);
  Normalize(x);

  LazyEigenpair out;
  out.converged = false;
  std::vector<double> y(k);
  double rho = 0.0;
  double prev_delta = 0.0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    for (VertexId u = 0; u < k; ++u) {
      double acc = 0.5 * x[u];
      for (const Neighbor& n : graph.neighbors(u)) {
        acc += 0.5 * n.weight * isd[u] * isd[n.id] * x[n.id];
      }
      y[u] = acc;
    }
    ProjectOut(y, top);
    double next = 0.0;
    for (std::size_t i = 0; i < k; ++i) next += x[i] * y[i];
    const double delta = next - rho;
    rho = next;
    out.iterations = it;
    if (Normalize(y) == 0.0) {
      // x lies in the kernel of M: the remaining spectrum is {0}.
      out.converged = true;
      break;
    }
    x.swap(y);
    if (it < 3) {
      prev_delta = delta;
      continue;
    }
    // Geometric extrapolation of the remaining Rayleigh-quotient increase.
    double estimate = std::abs(delta);
    if (prev_delta != 0.0) {
      const double ratio = delta / prev_delta;
      if (ratio > 0.0 && ratio < 1.0) estimate = std::abs(delta) * ratio / (1.0 - ratio);
    }
    prev_delta = delta;
    if (estimate <= options.tolerance * std::max(std::abs(rho), 1e-300) ||
        delta == 0.0) {
      out.converged = true;
      break;
    }
  }
  out.value = rho;
  out.vector = std::move(x);
  return out;
}

}  // namespace lgc
