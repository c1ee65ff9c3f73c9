#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/LU>

#include "sphere12/error.hpp"

namespace sphere12 {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;

/// A point on the unit 2-sphere. Construction always renormalizes, so the
/// unit invariant holds to within one ulp-scale rounding.
class UnitVector {
 public:
  UnitVector() : v_(0, 0, 1) {}

  /// Normalizes v. Throws degenerate_error if |v| is numerically zero.
  static UnitVector normalized(const Vec3& v);

  /// colat in [0,pi] measured from +z, lon counterclockwise from +x.
  static UnitVector from_spherical(double colat, double lon);

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }

  double colatitude() const;
  double longitude() const;  // in [0, 2*pi)

  UnitVector antipode() const { return UnitVector(-v_); }

 private:
  explicit UnitVector(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

/// Central angle between two touching points, in [0, pi]. The dot product is
/// clamped to [-1, 1] so numerically antipodal or coincident pairs never
/// produce NaN.
double angular_distance(const UnitVector& u, const UnitVector& v);

/// Touching-sphere radius for cap angular diameter theta: sin(theta/2) = r/(1+r).
/// Requires 0 < theta < pi.
double radius_from_angle(double theta);

/// Inverse of radius_from_angle: theta = 2*asin(r/(1+r)). Requires r > 0.
double angle_from_radius(double r);

/// Proper rotation of R^3, stored as a 3x3 matrix with R^T R = I, det R = +1.
class Rotation {
 public:
  Rotation() : m_(Mat3::Identity()) {}

  static Rotation identity() { return Rotation(); }
  static Rotation about_axis(const Vec3& axis, double angle);
  /// Validates orthogonality and det = +1 to 1e-9.
  static Rotation from_matrix(const Mat3& m);
  /// Minimal rotation taking `from` to `to` (identity if already aligned).
  static Rotation taking(const UnitVector& from, const UnitVector& to);

  const Mat3& matrix() const { return m_; }
  Rotation inverse() const;
  Rotation operator*(const Rotation& rhs) const;
  UnitVector operator()(const UnitVector& u) const;
  Vec3 operator()(const Vec3& v) const { return m_ * v; }

 private:
  explicit Rotation(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

/// A tangent direction at a base point; direction is orthogonal to base.
class TangentVector {
 public:
  /// Projects dir onto the tangent plane at base.
  TangentVector(const UnitVector& base, const Vec3& dir);

  const UnitVector& base() const { return base_; }
  const Vec3& direction() const { return dir_; }
  double norm() const { return dir_.norm(); }

 private:
  UnitVector base_;
  Vec3 dir_;
};

/// Spherical variation step: normalize(u + t*v). Agrees with the geodesic
/// exponential of t*v to second order in t.
UnitVector displace(const UnitVector& u, const TangentVector& v, double t);

/// Matrix-vector product followed by renormalization.
UnitVector rotate(const Rotation& r, const UnitVector& u);

/// Unit tangent at `at` pointing along the geodesic toward `to`.
/// Throws degenerate_error if the pair is (numerically) antipodal or coincident.
Vec3 geodesic_tangent(const UnitVector& at, const UnitVector& to);

}  // namespace sphere12
