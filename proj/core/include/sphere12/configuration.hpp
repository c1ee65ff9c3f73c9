#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sphere12/geom.hpp"

namespace sphere12 {

/// Default tolerance for identifying contact pairs: constructed coordinates
/// are accurate to ~1e-14, optimizer output to ~1e-10.
inline constexpr double kContactTol = 1e-9;

/// Coincidence threshold for Conf(N) admission.
inline constexpr double kDistinctTol = 1e-10;

/// N labeled points on the unit sphere. Labels are list positions.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<UnitVector> pts) : pts_(std::move(pts)) {}

  int n() const { return static_cast<int>(pts_.size()); }
  const UnitVector& operator[](int i) const { return pts_[i]; }
  UnitVector& operator[](int i) { return pts_[i]; }
  const std::vector<UnitVector>& points() const { return pts_; }
  std::vector<UnitVector>& points() { return pts_; }

  /// Throws invalid_configuration if two points are closer than kDistinctTol.
  void validate() const;

  /// Optional radius context carried through serialization.
  std::optional<double> radius;

 private:
  std::vector<UnitVector> pts_;
};

/// Half the minimum pairwise angular distance, in (0, pi/2].
/// Throws invalid_configuration on coincident points.
double injectivity_radius(const Configuration& u);

/// Membership in Conf(N)[r]: 2*rho(U) >= angle_from_radius(r) - 1e-12.
bool is_member(const Configuration& u, double r);

Configuration rotate_all(const Rotation& r, const Configuration& u);

/// Returns the configuration with point i relocated to position images[i].
Configuration permute_labels(const Configuration& u, const std::vector<int>& images);

/// Geodesic adjacency at exact angular distance `contact_angle` (within tol).
struct ContactGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j
  double contact_angle = 0;
  double tolerance = kContactTol;

  std::vector<int> degrees() const;
};

/// Edges are exactly the pairs within tol of theta. A pair at distance
/// < theta - tol throws overlap_error.
ContactGraph contact_graph(const Configuration& u, double theta,
                           double tol = kContactTol);

struct AlignmentResult {
  Rotation rotation;
  double rms = 0;  // root-mean-square chordal residual
};

/// Orthogonal Procrustes restricted to det +1: the rotation minimizing
/// sum_i |R u_i - w_i|^2, solved by SVD with sign correction.
AlignmentResult align(const Configuration& u, const Configuration& w);

/// Equality test in BConf(N): align residual at most tol.
bool equivalent_mod_rotation(const Configuration& u, const Configuration& w,
                             double tol = 1e-7);

}  // namespace sphere12
