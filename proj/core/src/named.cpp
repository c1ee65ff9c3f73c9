#include "sphere12/named.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sphere12 {

namespace {
constexpr double kGolden = 1.6180339887498948482;

UnitVector sph(double colat, double lon) {
  return UnitVector::from_spherical(colat, lon);
}
}  // namespace

double dod_polar_colatitude() {
  const double p2 = kGolden * kGolden;
  return std::acos(p2 / std::sqrt(3 * p2 + 3));
}

double dod_equatorial_colatitude() {
  const double p2 = kGolden * kGolden;
  return std::acos((kGolden - 1) / std::sqrt(3 * (1 + p2)));
}

double triangle_colatitude(double theta) {
  // cos(theta) = (3 cos^2 a - 1) / 2
  const double c2 = (2 * std::cos(theta) + 1) / 3;
  if (!(c2 > 0 && c2 <= 1))
    throw std::domain_error("triangle_colatitude: no polar solution for theta");
  return std::acos(std::sqrt(c2));
}

Configuration named_dod() {
  const double an = dod_polar_colatitude();
  const double bn = dod_equatorial_colatitude();
  std::vector<UnitVector> p(12);
  const double th = 2 * kPi / 3;
  for (int k = 0; k < 3; ++k) {
    p[k] = sph(an, k * th);                    // north triangle
    p[9 + k] = sph(kPi - an, kPi / 3 + k * th);  // south triangle
  }
  for (int k = 0; k < 6; ++k) {
    const double lon = k * kPi / 3;
    // Even longitudes (0, 2pi/3, 4pi/3) sit south of the equator; B^E1 is label 3.
    p[3 + k] = (k % 2 == 0) ? sph(kPi - bn, lon) : sph(bn, lon);
  }
  return Configuration(std::move(p));
}

namespace {
Configuration polar_triangles_plus_hexagon(double north_lon0, double south_lon0) {
  const double a = triangle_colatitude(kPi / 3);  // arccos sqrt(2/3)
  std::vector<UnitVector> p(12);
  const double th = 2 * kPi / 3;
  for (int k = 0; k < 3; ++k) {
    p[k] = sph(a, north_lon0 + k * th);
    p[9 + k] = sph(kPi - a, south_lon0 + k * th);
  }
  for (int k = 0; k < 6; ++k) p[3 + k] = sph(kPi / 2, k * kPi / 3);
  return Configuration(std::move(p));
}
}  // namespace

Configuration named_fcc() {
  return polar_triangles_plus_hexagon(kPi / 6, kPi / 2);
}

Configuration named_hcp() {
  return polar_triangles_plus_hexagon(kPi / 6, kPi / 6);
}

Configuration named_tet() {
  const double s = 1.0 / std::sqrt(3.0);
  std::vector<UnitVector> p;
  p.push_back(UnitVector::normalized(Vec3(s, s, s)));
  p.push_back(UnitVector::normalized(Vec3(s, -s, -s)));
  p.push_back(UnitVector::normalized(Vec3(-s, s, -s)));
  p.push_back(UnitVector::normalized(Vec3(-s, -s, s)));
  return Configuration(std::move(p));
}

Configuration named_oct() {
  std::vector<UnitVector> p(6);
  p[0] = sph(0, 0);
  for (int k = 0; k < 4; ++k) p[1 + k] = sph(kPi / 2, k * kPi / 2);
  p[5] = sph(kPi, 0);
  return Configuration(std::move(p));
}

Configuration named_ring(int n) {
  if (n < 3) throw std::domain_error("named_ring: need n >= 3");
  std::vector<UnitVector> p(n);
  for (int k = 0; k < n; ++k) p[k] = sph(kPi / 2, 2 * kPi * k / n);
  return Configuration(std::move(p));
}

Configuration named_theta5(double a1, double a2, double a3) {
  for (double a : {a1, a2, a3})
    if (!(a > kPi / 2 && a < kPi))
      throw std::domain_error("named_theta5: each gap must lie in (pi/2, pi)");
  if (std::abs(a1 + a2 + a3 - 2 * kPi) > 1e-9)
    throw std::domain_error("named_theta5: gaps must sum to 2*pi");
  std::vector<UnitVector> p(5);
  p[0] = sph(0, 0);
  p[1] = sph(kPi / 2, 0);
  p[2] = sph(kPi / 2, a1);
  p[3] = sph(kPi / 2, a1 + a2);
  p[4] = sph(kPi, 0);
  return Configuration(std::move(p));
}

Configuration named_m5_halfway() {
  std::vector<UnitVector> p(12);
  p[0] = sph(0, 0);
  p[11] = sph(kPi, 0);
  for (int k = 0; k < 5; ++k) {
    const double lon = kPi / 5 + k * 2 * kPi / 5;
    p[1 + k] = sph(kPi / 3, lon);
    p[6 + k] = sph(2 * kPi / 3, lon);
  }
  return Configuration(std::move(p));
}

NamedConfig NamedConfig::parse(const std::string& name) {
  NamedConfig c;
  if (name == "DOD") {
    c.kind = Kind::DOD;
  } else if (name == "FCC") {
    c.kind = Kind::FCC;
  } else if (name == "HCP") {
    c.kind = Kind::HCP;
  } else if (name == "TET") {
    c.kind = Kind::TET;
  } else if (name == "OCT") {
    c.kind = Kind::OCT;
  } else if (name == "M5_HALFWAY") {
    c.kind = Kind::M5_HALFWAY;
  } else if (name.rfind("RING(", 0) == 0 && name.back() == ')') {
    c.kind = Kind::RING;
    c.ring_n = std::stoi(name.substr(5, name.size() - 6));
  } else if (name.rfind("THETA5(", 0) == 0 && name.back() == ')') {
    c.kind = Kind::THETA5;
    double a1, a2, a3;
    if (std::sscanf(name.c_str(), "THETA5(%lf,%lf,%lf)", &a1, &a2, &a3) != 3)
      throw std::domain_error("named: cannot parse THETA5 angles in '" + name + "'");
    c.angles = {a1, a2, a3};
  } else {
    throw std::domain_error("named: unknown configuration name '" + name + "'");
  }
  return c;
}

Configuration named(const NamedConfig& spec) {
  switch (spec.kind) {
    case NamedConfig::Kind::DOD:
      return named_dod();
    case NamedConfig::Kind::FCC:
      return named_fcc();
    case NamedConfig::Kind::HCP:
      return named_hcp();
    case NamedConfig::Kind::TET:
      return named_tet();
    case NamedConfig::Kind::OCT:
      return named_oct();
    case NamedConfig::Kind::RING:
      return named_ring(spec.ring_n);
    case NamedConfig::Kind::THETA5:
      return named_theta5(spec.angles[0], spec.angles[1], spec.angles[2]);
    case NamedConfig::Kind::M5_HALFWAY:
      return named_m5_halfway();
  }
  throw std::domain_error("named: unknown kind");
}

Configuration named(const std::string& name) { return named(NamedConfig::parse(name)); }

}  // namespace sphere12
