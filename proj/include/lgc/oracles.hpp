#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lgc/generators.hpp"

namespace lgc {

// Lazy-walk spectrum of the unit chain 0 - 1 - ... - ell.
struct ChainSpectrum {
  std::size_t ell;

  // cos^2(pi k / (2 ell)).
  double Eigenvalue(std::size_t k) const;
  // deg(u) cos(pi k u / ell), deg(0) = deg(ell) = 1, otherwise 2.
  double VectorEntry(std::size_t k, std::size_t u) const;
  std::vector<double> Vector(std::size_t k) const;
};

// max_k ||v_k W - lambda_k v_k||_inf on the (ell+1)-vertex chain.
double ChainEigenCheck(std::size_t ell);

// max_{j != k} |<v_j, v_k>| / (||v_j|| ||v_k||) under the deg^-1 inner product.
double ChainOrthogonalityCheck(std::size_t ell);

enum class AppendixLemma { kA1, kA2, kA3, kA4 };

const char* ToString(AppendixLemma lemma);
AppendixLemma ParseAppendixLemma(const std::string& text);

struct AppendixBoundRequest {
  AppendixLemma lemma = AppendixLemma::kA1;
  std::size_t ell = 100;  // even
  double gamma = 1.0;     // in (0, 4]; alpha = gamma / ell^2

  void Validate() const;
  double alpha() const;
};

// Leading-order bound:
//   A1  (1/2l)(1 - 2g/(pi^2/4 + g) + 2g/(pi^2 + g))   upper, pr_0(l) on the chain
//   A2  (1/l)(1 - 2g/(pi^2 + g))                       lower, pr_0(l/2)
//   A3  (1/l)(1 + sqrt g)                              upper, pr_{l/2}(l/2)
//   A4  sqrt(pi g) / (2l)                              lower, pr_0(0), infinite chain
double AppendixBound(const AppendixBoundRequest& request);

struct AppendixCheck {
  AppendixBoundRequest request;
  double measured = 0.0;
  double bound = 0.0;
  // Bound with the hidden-order term replaced by slack_constant / ell^p.
  double slacked_bound = 0.0;
  // Upper bound on how far the finite chain can move the A4 value; 0 otherwise.
  double truncation = 0.0;
  // Signed distance to failure; >= 0 means the inequality holds.
  double margin = 0.0;
  bool pass = false;
};

// Exact PageRank on the chain (sparse solve) checked against the slacked
// bound. A1 and A2 take slack / ell^2 inside the parentheses, A3 slack / ell,
// A4 slack / ell^2 after subtracting the truncation bound; A4 runs on a chain
// of 20 ell edges with the start at its center.
AppendixCheck VerifyAppendixLemma(const AppendixBoundRequest& request,
                                  double slack_constant);

// Probability that a lazy walk on the chain started at the origin reaches
// distance m before a PageRank walk with teleport alpha stops. Bounds how far
// cutting the infinite chain at +-m can move pr(origin).
double ChainTruncationBound(double alpha, std::size_t m);

// c0 from c2 = 1 - A1 / A2 (leading terms, factors of l removed),
// c1 = c2 / 2, c0 = 2 / c1.
double LemmaA5C0(double gamma);

struct Lemma51Check {
  double normalized_d = 0.0;  // pr_a(d) / deg(d)
  double normalized_c = 0.0;  // pr_a(c) / deg(c)
  bool pass = false;
};

// Exact pr_a on the instance with alpha = gamma / ell^2.
Lemma51Check VerifyLemma51(const HardInstance& instance, double gamma);

struct SweepScan {
  double min_phi = 0.0;
  std::size_t prefix_length = 0;
  double phi_a = 0.0;
  // min_phi / (phi(A) ell); phi(A) / sqrt(Conn) with Conn ~ 1/ell^2.
  double ratio = 0.0;
  // Sweep positions (0-based) of c and d.
  std::size_t position_c = 0;
  std::size_t position_d = 0;
  // True when some prefix contains c but not d.
  bool c_without_d = false;
  Lemma51Check lemma51;
};

SweepScan HardInstanceSweepScan(const HardInstance& instance, double gamma);

struct HardGridPoint {
  std::size_t ell = 0;
  double phi_ell2 = 0.0;
  double gamma = 0.0;
  HardInstanceSpec spec;
  double max_drift = 0.0;
  SweepScan scan;
  bool lemma51 = false;
  bool sweep_bound = false;  // min phi >= anchor * phi(A) * ell
  std::string error;         // resolution failure, if any

  bool pass() const { return error.empty() && lemma51 && sweep_bound; }
};

struct HardGridOptions {
  std::vector<std::size_t> ells{100, 200, 400};
  // Tried from largest to smallest.
  std::vector<double> phi_ell2{0.25, 0.1, 0.05, 0.01};
  std::vector<double> gammas{1.0, 2.0, 4.0};
  double anchor = 0.05;
  // n is chosen so that the bridge weight phi n equals this.
  double bridge_weight = 100.0;
  bool stop_at_first_pass = true;
};

HardInstanceSpec HardSpecFor(std::size_t ell, double phi_ell2, double gamma,
                             double bridge_weight = 100.0);

// Scans ell ascending, phi ell^2 descending, gamma ascending.
std::vector<HardGridPoint> HardInstanceGridSearch(const HardGridOptions& options = {});

HardGridPoint EvaluateHardPoint(std::size_t ell, double phi_ell2, double gamma,
                                double anchor = 0.05, double bridge_weight = 100.0);

}  // namespace lgc
