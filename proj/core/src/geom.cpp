#include "sphere12/geom.hpp"

#include <algorithm>
#include <cmath>

namespace sphere12 {

UnitVector UnitVector::normalized(const Vec3& v) {
  const double n = v.norm();
  if (n < 1e-300) throw degenerate_error("cannot normalize a zero vector");
  return UnitVector(v / n);
}

UnitVector UnitVector::from_spherical(double colat, double lon) {
  const double s = std::sin(colat);
  return UnitVector(Vec3(s * std::cos(lon), s * std::sin(lon), std::cos(colat)));
}

double UnitVector::colatitude() const {
  return std::acos(std::clamp(v_.z(), -1.0, 1.0));
}

double UnitVector::longitude() const {
  double lon = std::atan2(v_.y(), v_.x());
  if (lon < 0) lon += 2 * kPi;
  return lon;
}

double angular_distance(const UnitVector& u, const UnitVector& v) {
  return std::acos(std::clamp(u.vec().dot(v.vec()), -1.0, 1.0));
}

double radius_from_angle(double theta) {
  if (!(theta > 0.0 && theta < kPi))
    throw std::domain_error("radius_from_angle: theta must lie in (0, pi)");
  const double s = std::sin(theta / 2);
  return s / (1.0 - s);
}

double angle_from_radius(double r) {
  if (!(r > 0.0)) throw std::domain_error("angle_from_radius: r must be positive");
  return 2.0 * std::asin(r / (1.0 + r));
}

Rotation Rotation::about_axis(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (n < 1e-300) throw degenerate_error("rotation axis must be nonzero");
  const Vec3 a = axis / n;
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 k;
  k << 0, -a.z(), a.y(), a.z(), 0, -a.x(), -a.y(), a.x(), 0;
  return Rotation(Mat3(Mat3::Identity() + s * k + (1 - c) * (k * k)));
}

Rotation Rotation::from_matrix(const Mat3& m) {
  if ((m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-9 ||
      std::abs(m.determinant() - 1.0) > 1e-9)
    throw std::domain_error("Rotation::from_matrix: not a proper rotation");
  return Rotation(m);
}

Rotation Rotation::taking(const UnitVector& from, const UnitVector& to) {
  const Vec3 f = from.vec(), t = to.vec();
  const double c = std::clamp(f.dot(t), -1.0, 1.0);
  Vec3 axis = f.cross(t);
  if (axis.norm() < 1e-14) {
    if (c > 0) return identity();
    // Antipodal: any axis orthogonal to f works; pick deterministically.
    Vec3 helper = std::abs(f.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
    axis = f.cross(helper);
  }
  return about_axis(axis, std::acos(c));
}

Rotation Rotation::inverse() const { return Rotation(Mat3(m_.transpose())); }

Rotation Rotation::operator*(const Rotation& rhs) const {
  return Rotation(Mat3(m_ * rhs.m_));
}

UnitVector Rotation::operator()(const UnitVector& u) const {
  return UnitVector::normalized(m_ * u.vec());
}

TangentVector::TangentVector(const UnitVector& base, const Vec3& dir)
    : base_(base), dir_(dir - dir.dot(base.vec()) * base.vec()) {}

UnitVector displace(const UnitVector& u, const TangentVector& v, double t) {
  const Vec3 w = u.vec() + t * v.direction();
  const double n = w.norm();
  if (n < 1e-12) throw degenerate_error("displace: degenerate displacement");
  return UnitVector::normalized(w);
}

UnitVector rotate(const Rotation& r, const UnitVector& u) { return r(u); }

Vec3 geodesic_tangent(const UnitVector& at, const UnitVector& to) {
  const Vec3 perp = to.vec() - to.vec().dot(at.vec()) * at.vec();
  const double n = perp.norm();
  if (n < 1e-12)
    throw degenerate_error("geodesic_tangent: endpoints coincident or antipodal");
  return perp / n;
}

}  // namespace sphere12
