#include "sphere12/balance.hpp"

#include <cmath>
#include <random>

#include "sphere12/simplex.hpp"

namespace sphere12 {

ForceSystem force_system(const Configuration& u, const ContactGraph& g) {
  ForceSystem fs;
  fs.at_vertex.resize(u.n());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto [i, j] = g.edges[e];
    fs.at_vertex[i].emplace_back(e, geodesic_tangent(u[i], u[j]));
    fs.at_vertex[j].emplace_back(e, geodesic_tangent(u[j], u[i]));
  }
  return fs;
}

double balance_residual(const Configuration& u, const StressGraph& s) {
  std::vector<Vec3> force(u.n(), Vec3::Zero());
  for (int e = 0; e < static_cast<int>(s.graph.edges.size()); ++e) {
    const auto [i, j] = s.graph.edges[e];
    force[i] += s.weights[e] * geodesic_tangent(u[i], u[j]);
    force[j] += s.weights[e] * geodesic_tangent(u[j], u[i]);
  }
  double worst = 0;
  for (const Vec3& f : force) worst = std::max(worst, f.norm());
  return worst;
}

BalanceCertificate is_balanced(const Configuration& u, double theta,
                               double contact_tol) {
  const ContactGraph g = contact_graph(u, theta, contact_tol);
  const int ne = static_cast<int>(g.edges.size());
  if (ne == 0) return {false, std::nullopt, 0.0};

  const ForceSystem fs = force_system(u, g);
  const int rows3 = 3 * u.n();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows3, ne);
  for (int v = 0; v < u.n(); ++v)
    for (const auto& [e, t] : fs.at_vertex[v]) m.block<3, 1>(3 * v, e) = t;

  // minimize t  s.t.  -t <= (M w)_r <= t,  sum(w) = 1,  w >= 0.
  LinearProgram lp;
  const int nv = ne + 1;
  lp.A = Eigen::MatrixXd::Zero(2 * rows3 + 1, nv);
  lp.b = Eigen::VectorXd::Zero(2 * rows3 + 1);
  lp.c = Eigen::VectorXd::Zero(nv);
  lp.c(ne) = 1.0;
  lp.row_type.assign(2 * rows3 + 1, '<');
  for (int r = 0; r < rows3; ++r) {
    lp.A.block(r, 0, 1, ne) = m.row(r);
    lp.A(r, ne) = -1.0;
    lp.A.block(rows3 + r, 0, 1, ne) = -m.row(r);
    lp.A(rows3 + r, ne) = -1.0;
  }
  lp.A.block(2 * rows3, 0, 1, ne).setOnes();
  lp.b(2 * rows3) = 1.0;
  lp.row_type[2 * rows3] = '=';

  const LPResult res = solve_lp(lp);
  if (res.status != LPStatus::Optimal)
    throw numeric_error("is_balanced: LP solver did not converge");

  StressGraph s;
  s.graph = g;
  s.weights.assign(ne, 0.0);
  double wsum = 0;
  for (int e = 0; e < ne; ++e) {
    s.weights[e] = std::max(res.x(e), 0.0);
    wsum += s.weights[e];
  }
  for (double& w : s.weights) w /= wsum;

  const double residual = balance_residual(u, s);
  if (residual > kBalanceResidualTol) return {false, std::nullopt, residual};

  // Balanced support must wind at least a full great circle (total angular
  // length >= 2*pi); anything less indicates a solver defect.
  double support_len = 0;
  for (double w : s.weights)
    if (w > 1e-9) support_len += g.contact_angle;
  if (support_len < 2 * kPi - 1e-6)
    throw numeric_error("is_balanced: certificate support below 2*pi total length");

  return {true, s, residual};
}

double first_critical_radius(int n) {
  if (n < 3) throw std::domain_error("first_critical_radius: need N >= 3");
  const double s = std::sin(kPi / n);
  return s / (1.0 - s);
}

ProbeResult improving_direction_probe(const Configuration& u, int samples,
                                      double step, std::uint64_t seed) {
  if (samples < 1) throw std::domain_error("improving_direction_probe: samples >= 1");
  const double rho0 = injectivity_radius(u);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  ProbeResult out;
  std::vector<Vec3> dirs(u.n());
  for (int s = 0; s < samples; ++s) {
    double norm2 = 0;
    for (int i = 0; i < u.n(); ++i) {
      Vec3 d(gauss(rng), gauss(rng), gauss(rng));
      d -= d.dot(u[i].vec()) * u[i].vec();
      dirs[i] = d;
      norm2 += d.squaredNorm();
    }
    const double inv = 1.0 / std::sqrt(norm2);
    Configuration moved = u;
    for (int i = 0; i < u.n(); ++i)
      moved[i] = displace(u[i], TangentVector(u[i], dirs[i] * inv), step);
    const double gain = std::max(injectivity_radius(moved) - rho0, 0.0) / step;
    out.best_gain = std::max(out.best_gain, gain);
  }
  out.improving = out.best_gain > 10.0 * step;
  return out;
}

}  // namespace sphere12
