#pragma once

#include <optional>
#include <string>

#include "sphere12/balance.hpp"
#include "sphere12/configuration.hpp"

namespace sphere12 {

/// SVG rendering of a configuration with its contact graph, in the style of
/// the point-and-arc contact diagrams.
struct RenderSpec {
  enum class Projection { Orthographic, Stereographic };
  Projection projection = Projection::Orthographic;
  Vec3 axis{0, 0, 1};          // view axis for orthographic
  UnitVector pole;             // projection pole for stereographic (+z default)
  int size = 600;              // canvas pixels
  bool show_labels = false;
  bool show_weights = false;
  std::optional<double> contact_theta;  // draw edges of contact_graph(theta)
  double contact_tol = kContactTol;
};

/// Deterministic bytes for fixed input. Geodesic edges are drawn as
/// 32-segment polylines of the projected great-circle arc. Throws
/// degenerate_error if the stereographic pole coincides with a point
/// (within 1e-6).
std::string render_svg(const Configuration& c, const RenderSpec& spec,
                       const std::optional<StressGraph>& stress = std::nullopt);

}  // namespace sphere12
