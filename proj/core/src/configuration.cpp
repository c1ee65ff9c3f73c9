#include "sphere12/configuration.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

namespace sphere12 {

void Configuration::validate() const {
  const int m = n();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (angular_distance(pts_[i], pts_[j]) <= kDistinctTol)
        throw invalid_configuration("points " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
}

double injectivity_radius(const Configuration& u) {
  u.validate();
  double min_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < u.n(); ++i)
    for (int j = i + 1; j < u.n(); ++j)
      min_d = std::min(min_d, angular_distance(u[i], u[j]));
  return 0.5 * min_d;
}

bool is_member(const Configuration& u, double r) {
  return 2.0 * injectivity_radius(u) >= angle_from_radius(r) - 1e-12;
}

Configuration rotate_all(const Rotation& r, const Configuration& u) {
  std::vector<UnitVector> pts;
  pts.reserve(u.n());
  for (int i = 0; i < u.n(); ++i) pts.push_back(r(u[i]));
  Configuration out(std::move(pts));
  out.radius = u.radius;
  return out;
}

Configuration permute_labels(const Configuration& u, const std::vector<int>& images) {
  std::vector<UnitVector> pts(u.n());
  for (int i = 0; i < u.n(); ++i) pts[images[i]] = u[i];
  Configuration out(std::move(pts));
  out.radius = u.radius;
  return out;
}

std::vector<int> ContactGraph::degrees() const {
  std::vector<int> deg(n, 0);
  for (const auto& [i, j] : edges) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

ContactGraph contact_graph(const Configuration& u, double theta, double tol) {
  ContactGraph g;
  g.n = u.n();
  g.contact_angle = theta;
  g.tolerance = tol;
  for (int i = 0; i < u.n(); ++i)
    for (int j = i + 1; j < u.n(); ++j) {
      const double d = angular_distance(u[i], u[j]);
      if (d < theta - tol)
        throw overlap_error("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") at distance " + std::to_string(d) +
                            " overlaps below contact angle " + std::to_string(theta));
      if (std::abs(d - theta) <= tol) g.edges.emplace_back(i, j);
    }
  return g;
}

AlignmentResult align(const Configuration& u, const Configuration& w) {
  if (u.n() != w.n()) throw std::domain_error("align: size mismatch");
  Mat3 cov = Mat3::Zero();
  for (int i = 0; i < u.n(); ++i) cov += w[i].vec() * u[i].vec().transpose();
  Eigen::JacobiSVD<Mat3> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 d = Mat3::Identity();
  if ((svd.matrixU() * svd.matrixV().transpose()).determinant() < 0) d(2, 2) = -1;
  const Mat3 rm = svd.matrixU() * d * svd.matrixV().transpose();
  const Rotation rot = Rotation::from_matrix(rm);

  double ss = 0;
  for (int i = 0; i < u.n(); ++i) ss += (rm * u[i].vec() - w[i].vec()).squaredNorm();
  return {rot, std::sqrt(ss / u.n())};
}

bool equivalent_mod_rotation(const Configuration& u, const Configuration& w,
                             double tol) {
  return align(u, w).rms <= tol;
}

}  // namespace sphere12
