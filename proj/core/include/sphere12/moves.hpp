#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sphere12/configuration.hpp"

namespace sphere12 {

/// One closed-form piece of a deformation path, evaluable at any t in [0,1].
class PathSegment {
 public:
  using EvalFn = std::function<Configuration(double)>;

  PathSegment(std::string kind, std::map<std::string, double> params, EvalFn eval)
      : kind_(std::move(kind)), params_(std::move(params)), eval_(std::move(eval)) {}

  Configuration at(double t) const;  // clamps t to [0,1]
  const std::string& kind() const { return kind_; }
  const std::map<std::string, double>& params() const { return params_; }

 private:
  std::string kind_;
  std::map<std::string, double> params_;
  EvalFn eval_;
};

/// Piecewise-analytic map [0,1] -> Conf(12)[r]: an ordered chain of segments
/// whose endpoints match (chordal gap < 1e-10). Labels ride list positions
/// through every segment.
class DeformationPath {
 public:
  DeformationPath(std::vector<std::shared_ptr<const PathSegment>> segments,
                  double radius);

  int segments() const { return static_cast<int>(segs_.size()); }
  const PathSegment& segment(int k) const { return *segs_[k]; }
  double radius() const { return radius_; }

  Configuration at_segment(int k, double local_t) const;
  /// Global parameter: segment k covers [k/M, (k+1)/M].
  Configuration at(double t) const;
  Configuration start() const { return at_segment(0, 0.0); }
  Configuration end() const { return at_segment(segments() - 1, 1.0); }

  void declare_target(Configuration target) { target_ = std::move(target); }
  const std::optional<Configuration>& declared_target() const { return target_; }

 private:
  std::vector<std::shared_ptr<const PathSegment>> segs_;
  double radius_;
  std::optional<Configuration> target_;
};

/// Reverse traversal (t -> 1-t) of an existing segment.
std::shared_ptr<const PathSegment> reversed(std::shared_ptr<const PathSegment> s);
/// Relabeled traversal: position i of the result is position images[i] of s.
std::shared_ptr<const PathSegment> relabeled(std::shared_ptr<const PathSegment> s,
                                             std::vector<int> images);

struct PathReport {
  double min_separation = 0;
  std::vector<double> violation_times;  // global t values
  long samples = 0;
  double endpoint_match_rms = 0;  // 0 when the path declares no target
};

/// Samples every segment uniformly, recording the minimum pairwise separation
/// and flagging times where it drops below angle_from_radius(radius) - 1e-9.
PathReport verify_path(const DeformationPath& path, int samples_per_segment);

enum class M6Variant { FCC, HCP };

/// The two-phase deformation DOD -> FCC/HCP. Phase 1 moves the polar
/// triangles along meridians to the mutual-touching parallel; phase 2 lowers
/// the six equatorial balls onto the equator while the triangles rotate with
/// the tangency-tracking longitude increment. interior_eps > 0 keeps every
/// pairwise separation strictly above theta(r) until the final instant.
/// Requires r <= 1 (throws infeasible_move_error otherwise).
DeformationPath m6_path(M6Variant variant, double r, double interior_eps = 0);

/// Longitude increment of the polar triangles at phase-2 time t (r = 1 chart).
double m6_phase2_increment(double t, double r = 1.0);

/// Isosceles-triangle check along phase 2: |AO| = |BO| and both exceed pi/3
/// for every t in (0,1). Returns the pair (|AO|, |BO|).
std::pair<double, double> lemma57_lengths(double t);
bool lemma57_check(const std::vector<double>& t_grid);

/// The three-phase 5-ball rotation move based at the DOD ball `pole`:
/// gather both polar clusters, rotate the northern one by direction * 2pi/5,
/// reverse the gather. Induces a 5-cycle on the northern non-polar balls.
/// Requires 0 < r <= 1.
DeformationPath m5_path(int pole, int direction, double r);

/// Longitude gap between adjacent gathered northern balls at the end of M5
/// phase 1: zeta = 2pi/5 - arccos(1/3).
double m5_phase1_gap();

/// The r > 1 variant of M5: crossings are staggered and each one applies the
/// local detour (active pair toward the poles, pole balls displaced onto the
/// opposite meridian). Valid for 1 < r <= min_j bottleneck r1(j).
DeformationPath modified_m5_path(int pole, int direction, double r);

struct BottleneckResult {
  int j = 0;        // 1..5
  double r1 = 0;    // maximal radius admitting touching pattern j
  Configuration config;  // the pattern solution at r1
};

/// Maximal radius for which the j-th M5 crossing pattern exists, with the
/// realizing configuration. j in 1..5.
BottleneckResult bottleneck_radius(int j);

/// min over j of bottleneck_radius(j).r1 (cached).
double min_bottleneck_radius();

/// Contact pairs (vertex indices in the canonical N,U1..U5,V1..V5,S order)
/// that pattern j pins at exactly theta(r).
std::vector<std::pair<int, int>> bottleneck_pattern_edges(int j);

/// Solves pattern j at a fixed radius r (not necessarily maximal); used by
/// the modified-M5 construction and the bracket tests.
std::optional<Configuration> bottleneck_pattern_at(int j, double r);

}  // namespace sphere12
