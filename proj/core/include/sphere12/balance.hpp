#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sphere12/configuration.hpp"

namespace sphere12 {

/// Contact graph with nonnegative edge weights; a criticality certificate
/// when the weighted edge-tangent forces balance at every vertex.
struct StressGraph {
  ContactGraph graph;
  std::vector<double> weights;  // parallel to graph.edges, sum to 1
};

/// Per-vertex outward unit tangents, one entry (edge index, tangent) for each
/// incident contact edge.
struct ForceSystem {
  std::vector<std::vector<std::pair<int, Vec3>>> at_vertex;
};

/// Tangents along each contact edge toward the opposite endpoint.
/// Throws degenerate_error if an edge joins antipodal points.
ForceSystem force_system(const Configuration& u, const ContactGraph& g);

struct BalanceCertificate {
  bool balanced = false;
  std::optional<StressGraph> weights;
  double residual = 0;  // max per-vertex force norm under the returned weights
};

/// Residual above which a weight assignment no longer counts as balanced.
inline constexpr double kBalanceResidualTol = 1e-8;

/// Linear-feasibility criticality test: find w >= 0 with sum(w) = 1 whose
/// edge-tangent forces cancel at every vertex (3N ambient equations; the
/// radial component vanishes identically). Solved as min-residual LP; the
/// certificate is positive when the residual is at most kBalanceResidualTol.
/// An empty contact graph yields balanced = false.
BalanceCertificate is_balanced(const Configuration& u, double theta,
                               double contact_tol = kContactTol);

/// Max per-vertex force norm of a given stress graph on a configuration.
double balance_residual(const Configuration& u, const StressGraph& s);

/// Smallest critical radius r1(N) = sin(pi/N) / (1 - sin(pi/N)), attained by
/// the N-Ring. Requires N >= 3.
double first_critical_radius(int n);

struct ProbeResult {
  bool improving = false;
  double best_gain = 0;  // max over samples of [rho(U # t V) - rho(U)]_+ / t
};

/// Samples random unit tangent frames and reports whether any gives a
/// first-order increase of the injectivity radius (gain above 10*step).
/// A negative result is evidence, not proof, of criticality.
ProbeResult improving_direction_probe(const Configuration& u, int samples,
                                      double step, std::uint64_t seed = 20120617);

}  // namespace sphere12
