#pragma once

#include <cstdint>
#include <vector>

#include "sphere12/balance.hpp"
#include "sphere12/configuration.hpp"

namespace sphere12 {

struct TammesResult {
  int n = 0;
  double theta = 0;   // best min pairwise angular distance found
  double radius = 0;  // radius_from_angle(theta)
  Configuration config;
  int restarts_used = 0;
  BalanceCertificate certificate;
};

struct TammesOptions {
  int restarts = 200;
  std::uint64_t seed = 1;
  std::vector<double> betas{10, 100, 1000, 10000};  // softmin schedule
  int softmin_iters = 150;
  int polish_iters = 60;
  double active_window = 1e-6;  // near-minimal identification at convergence
};

/// Multi-start maximin solver: per restart, uniform random points (normalized
/// Gaussian triples), softmin gradient ascent over the beta schedule, then an
/// iterated tangent-space LP polish (maximize the common first-order slack of
/// near-minimal pairs). Deterministic for fixed (N, restarts, seed); restarts
/// run concurrently with per-restart derived seeds, and the reduction picks
/// the max theta with restart index as tie-break.
TammesResult solve(int n, const TammesOptions& opts);
TammesResult solve(int n, int restarts, std::uint64_t seed);

/// Integer-coefficient polynomial, ascending degree.
struct IntegerPolynomial {
  std::vector<long long> coeffs;
};

/// |p(r)| by Horner evaluation.
double certify_polynomial(const IntegerPolynomial& p, double r);

struct RobinsonGap {
  double r_n = 0;
  double r_n_minus_1 = 0;
  bool strict = false;  // r_n < r_{n-1} - 1e-6
};

/// Numerical evidence for the strict monotonicity of r_max.
RobinsonGap robinson_gap(int n, int restarts, std::uint64_t seed);

}  // namespace sphere12
