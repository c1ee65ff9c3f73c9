#include <doctest.h>

#include <cmath>
#include <random>

#include "sphere12/geom.hpp"

using namespace sphere12;

namespace {
UnitVector uv(double x, double y, double z) {
  return UnitVector::normalized(Vec3(x, y, z));
}
}  // namespace

TEST_CASE("angular_distance basic values") {
  CHECK(angular_distance(uv(0, 0, 1), uv(0, 0, -1)) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(angular_distance(uv(1, 0, 0), uv(1, 0, 0)) == doctest::Approx(0.0));
  CHECK(angular_distance(uv(1, 0, 0), uv(0, 1, 0)) ==
        doctest::Approx(kPi / 2).epsilon(1e-15));
  // Clamping keeps numerically coincident pairs NaN-free.
  const UnitVector a = uv(0.3, -0.4, 0.866025403784439);
  CHECK(std::isfinite(angular_distance(a, a)));
  CHECK(std::isfinite(angular_distance(a, a.antipode())));
}

TEST_CASE("radius <-> angle closed forms") {
  CHECK(radius_from_angle(kPi / 3) == doctest::Approx(1.0).epsilon(1e-14));
  // Table values: N=12 row and N=6 row.
  const double theta12 = std::acos(1.0 / std::sqrt(5.0));
  const double r12_exact = 1.0 / (std::sqrt((5 + std::sqrt(5.0)) / 2) - 1);
  CHECK(radius_from_angle(theta12) == doctest::Approx(r12_exact).epsilon(1e-13));
  CHECK(radius_from_angle(theta12) == doctest::Approx(1.1085085).epsilon(1e-6));
  CHECK(radius_from_angle(kPi / 2) ==
        doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-14));

  CHECK(angle_from_radius(1.0) == doctest::Approx(kPi / 3).epsilon(1e-14));
  CHECK(angle_from_radius(2 + std::sqrt(6.0)) ==
        doctest::Approx(std::acos(-1.0 / 3)).epsilon(1e-13));

  for (double theta : {0.1, 1.0, 3.0})
    CHECK(angle_from_radius(radius_from_angle(theta)) ==
          doctest::Approx(theta).epsilon(1e-12));

  CHECK_THROWS_AS(radius_from_angle(0.0), std::domain_error);
  CHECK_THROWS_AS(radius_from_angle(kPi), std::domain_error);
  CHECK_THROWS_AS(radius_from_angle(-0.5), std::domain_error);
  CHECK_THROWS_AS(angle_from_radius(0.0), std::domain_error);
  CHECK_THROWS_AS(angle_from_radius(-1.0), std::domain_error);
}

TEST_CASE("radius_from_angle strictly monotone") {
  double prev = 0;
  for (int k = 1; k < 100; ++k) {
    const double r = radius_from_angle(k * kPi / 100);
    CHECK(r > prev);
    prev = r;
  }
}

TEST_CASE("displace identities and geodesic agreement") {
  const UnitVector u = uv(0, 0, 1);
  const TangentVector v(u, Vec3(1, 0, 0));
  CHECK(angular_distance(displace(u, v, 0.0), u) == doctest::Approx(0.0));
  const TangentVector zero(u, Vec3(0, 0, 0));
  CHECK(angular_distance(displace(u, zero, 0.7), u) == doctest::Approx(0.0));

  // Closed-form geometry of normalize(u + t v): the step angle is atan(t|v|).
  for (double t : {0.1, 0.25, 0.5})
    CHECK(angular_distance(u, displace(u, v, t)) ==
          doctest::Approx(std::atan(t)).epsilon(1e-12));

  // Second-order agreement with the exponential map.
  for (double t : {1e-3, 5e-4}) {
    const double err = std::abs(angular_distance(u, displace(u, v, t)) - t);
    CHECK(err <= t * t);
  }

  // Projection onto the tangent plane keeps |u + t v| >= 1, so even huge
  // steps stay well defined.
  CHECK(std::abs(displace(u, v, -1e12).vec().norm() - 1.0) < 1e-12);
}

TEST_CASE("tangent vectors project onto the tangent plane") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int i = 0; i < 100; ++i) {
    const UnitVector base = uv(g(rng), g(rng), g(rng));
    const TangentVector tv(base, Vec3(g(rng), g(rng), g(rng)));
    CHECK(std::abs(tv.direction().dot(base.vec())) < 1e-12);
  }
}

TEST_CASE("rotations act as isometries") {
  const UnitVector x = uv(1, 0, 0);
  CHECK(angular_distance(rotate(Rotation::identity(), x), x) == doctest::Approx(0.0));
  const Rotation half = Rotation::about_axis(Vec3(0, 0, 1), kPi);
  CHECK(angular_distance(rotate(half, x), uv(-1, 0, 0)) ==
        doctest::Approx(0.0).epsilon(1e-15));

  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int i = 0; i < 1000; ++i) {
    const Rotation r =
        Rotation::about_axis(Vec3(g(rng), g(rng), g(rng)), g(rng) * kPi);
    const UnitVector u = uv(g(rng), g(rng), g(rng));
    const UnitVector v = uv(g(rng), g(rng), g(rng));
    CHECK(std::abs(angular_distance(r(u), r(v)) - angular_distance(u, v)) < 1e-12);
  }
}

TEST_CASE("rotation validation and composition") {
  Mat3 bad = Mat3::Identity();
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(Rotation::from_matrix(bad), std::domain_error);
  Mat3 reflect = Mat3::Identity();
  reflect(2, 2) = -1.0;
  CHECK_THROWS_AS(Rotation::from_matrix(reflect), std::domain_error);

  const Rotation a = Rotation::about_axis(Vec3(1, 2, 3), 0.7);
  const Rotation b = Rotation::about_axis(Vec3(-1, 0, 2), 1.3);
  const Mat3 prod = (a * b).matrix();
  CHECK((prod - a.matrix() * b.matrix()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(((a * a.inverse()).matrix() - Mat3::Identity()).cwiseAbs().maxCoeff() <
        1e-14);

  const UnitVector from = uv(0.2, -0.5, 0.7), to = uv(-1, 1, 0);
  CHECK(angular_distance(Rotation::taking(from, to)(from), to) < 1e-14);
  CHECK(angular_distance(Rotation::taking(from, from.antipode())(from),
                         from.antipode()) < 1e-14);
}

TEST_CASE("geodesic_tangent degeneracies") {
  const UnitVector u = uv(0, 0, 1);
  CHECK_THROWS_AS(geodesic_tangent(u, u), degenerate_error);
  CHECK_THROWS_AS(geodesic_tangent(u, u.antipode()), degenerate_error);
  const Vec3 t = geodesic_tangent(uv(1, 0, 0), uv(0, 1, 0));
  CHECK((t - Vec3(0, 1, 0)).norm() < 1e-14);
}

TEST_CASE("spherical coordinates round trip") {
  const UnitVector p = UnitVector::from_spherical(1.1, 2.5);
  CHECK(p.colatitude() == doctest::Approx(1.1).epsilon(1e-14));
  CHECK(p.longitude() == doctest::Approx(2.5).epsilon(1e-14));
  CHECK_THROWS_AS(UnitVector::normalized(Vec3(0, 0, 0)), degenerate_error);
}
