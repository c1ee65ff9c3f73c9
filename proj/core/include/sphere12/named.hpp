#pragma once

#include <array>
#include <string>

#include "sphere12/configuration.hpp"

namespace sphere12 {

/// Reference configurations with fixed, documented charts and labelings.
///
/// DOD  — 12 icosahedron vertices, face-axis orientation: two opposite faces
///        parallel to the xy-plane at height z = +-h, h = phi^2/sqrt(3 phi^2+3);
///        one north ball and one (southern) equatorial ball on the Greenwich
///        meridian. Labels: 0-2 north triangle at longitudes 0, 2pi/3, 4pi/3;
///        3-8 equatorial in longitude order 0, pi/3, ..., 5pi/3 (even labels on
///        Greenwich-side southern latitudes, odd on northern); 9-11 south
///        triangle at longitudes pi/3, pi, 5pi/3.
/// FCC  — cuboctahedron: polar triangles at the mutual-touching parallel
///        (colat arccos sqrt(2/3)) plus a regular equatorial hexagon. Labels
///        inherited from the M6 endpoint: 0-2 north at longitudes pi/6 + k*2pi/3,
///        3-8 on the equator at k*pi/3, 9-11 south at pi/2 + k*2pi/3.
/// HCP  — triangular orthobicupola: like FCC but the south triangle aligned
///        under the north one (longitudes pi/6 + k*2pi/3).
/// TET/OCT — regular tetrahedron / octahedron vertices.
/// RING(N) — N equally spaced points on the equator.
/// THETA5(a1,a2,a3) — two poles plus three equatorial points with consecutive
///        gaps a1,a2,a3; each gap in (pi/2, pi), gaps summing to 2pi.
/// M5_HALFWAY — midpoint of the M5 second phase: poles plus five meridians
///        each holding a touching north/south pair at colatitudes pi/3, 2pi/3.
struct NamedConfig {
  enum class Kind { DOD, FCC, HCP, TET, OCT, RING, THETA5, M5_HALFWAY };
  Kind kind = Kind::DOD;
  int ring_n = 0;                        // for RING
  std::array<double, 3> angles{0, 0, 0};  // for THETA5

  /// Parses "DOD", "RING(6)", "THETA5(1.8,2.1,2.383185)", ...
  static NamedConfig parse(const std::string& name);
};

Configuration named(const NamedConfig& spec);
Configuration named(const std::string& name);

Configuration named_dod();
Configuration named_fcc();
Configuration named_hcp();
Configuration named_tet();
Configuration named_oct();
Configuration named_ring(int n);
Configuration named_theta5(double a1, double a2, double a3);
Configuration named_m5_halfway();

/// Icosahedron geometry constants for the DOD chart.
double dod_polar_colatitude();       // arccos(phi^2 / sqrt(3 phi^2 + 3))
double dod_equatorial_colatitude();  // northern-side value, < pi/2

/// Colatitude of three points with pairwise angular distance theta spaced
/// 2pi/3 in longitude: cos(theta) = cos^2(a) - sin^2(a)/2, solved for a.
double triangle_colatitude(double theta);

}  // namespace sphere12
