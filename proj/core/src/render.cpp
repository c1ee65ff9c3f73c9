#include "sphere12/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace sphere12 {

namespace {

constexpr int kArcSegments = 32;

struct Projector {
  const RenderSpec& spec;
  Vec3 e1, e2;  // screen basis

  explicit Projector(const RenderSpec& s) : spec(s) {
    Vec3 a = spec.projection == RenderSpec::Projection::Orthographic
                 ? spec.axis.normalized()
                 : spec.pole.vec();
    Vec3 h = std::abs(a.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
    e1 = (h - h.dot(a) * a).normalized();
    e2 = a.cross(e1);
    axis = a;
  }
  Vec3 axis;

  std::pair<double, double> operator()(const UnitVector& u) const {
    const Vec3 p = u.vec();
    if (spec.projection == RenderSpec::Projection::Orthographic)
      return {p.dot(e1), p.dot(e2)};
    const double denom = 1.0 - p.dot(axis);
    if (denom < 1e-12)
      throw degenerate_error("render: point coincides with the projection pole");
    return {p.dot(e1) / denom, p.dot(e2) / denom};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // Avoid the negative-zero byte difference.
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

}  // namespace

std::string render_svg(const Configuration& c, const RenderSpec& spec,
                       const std::optional<StressGraph>& stress) {
  if (spec.projection == RenderSpec::Projection::Stereographic)
    for (int i = 0; i < c.n(); ++i)
      if (angular_distance(c[i], spec.pole) < 1e-6)
        throw degenerate_error("render: stereographic pole hits point " +
                               std::to_string(i));

  const Projector proj(spec);

  std::vector<std::pair<int, int>> edges;
  std::vector<double> weights;
  if (stress) {
    edges = stress->graph.edges;
    weights = stress->weights;
  } else if (spec.contact_theta) {
    edges = contact_graph(c, *spec.contact_theta, spec.contact_tol).edges;
  }

  // Project everything first to frame the viewport.
  std::vector<std::pair<double, double>> pts(c.n());
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  auto grow = [&](std::pair<double, double> p) {
    lo_x = std::min(lo_x, p.first);
    hi_x = std::max(hi_x, p.first);
    lo_y = std::min(lo_y, p.second);
    hi_y = std::max(hi_y, p.second);
  };
  for (int i = 0; i < c.n(); ++i) {
    pts[i] = proj(c[i]);
    grow(pts[i]);
  }
  std::vector<std::vector<std::pair<double, double>>> arcs;
  for (const auto& [i, j] : edges) {
    std::vector<std::pair<double, double>> arc;
    const double d = angular_distance(c[i], c[j]);
    const Vec3 axis = c[i].vec().cross(c[j].vec());
    for (int s = 0; s <= kArcSegments; ++s) {
      const UnitVector p =
          axis.norm() < 1e-14
              ? c[i]
              : Rotation::about_axis(axis, d * s / kArcSegments)(c[i]);
      arc.push_back(proj(p));
      grow(arc.back());
    }
    arcs.push_back(std::move(arc));
  }

  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-6});
  const double pad = 0.08 * span;
  const double scale = spec.size / (span + 2 * pad);
  auto sx = [&](double x) { return (x - lo_x + pad) * scale; };
  auto sy = [&](double y) { return spec.size - (y - lo_y + pad) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.size
      << "\" height=\"" << spec.size << "\" viewBox=\"0 0 " << spec.size << " "
      << spec.size << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t e = 0; e < arcs.size(); ++e) {
    const double w =
        weights.empty() ? 1.5 : std::max(0.5, 6.0 * weights[e] * arcs.size() / 4);
    svg << "<polyline fill=\"none\" stroke=\"#345995\" stroke-width=\""
        << fmt(w) << "\" points=\"";
    for (const auto& [x, y] : arcs[e]) svg << fmt(sx(x)) << ',' << fmt(sy(y)) << ' ';
    svg << "\"/>\n";
    if (spec.show_weights && !weights.empty()) {
      const auto& mid = arcs[e][arcs[e].size() / 2];
      svg << "<text x=\"" << fmt(sx(mid.first)) << "\" y=\"" << fmt(sy(mid.second))
          << "\" font-size=\"11\" fill=\"#345995\">" << fmt(weights[e])
          << "</text>\n";
    }
  }
  for (int i = 0; i < c.n(); ++i) {
    svg << "<circle cx=\"" << fmt(sx(pts[i].first)) << "\" cy=\""
        << fmt(sy(pts[i].second)) << "\" r=\"5\" fill=\"#e63946\"/>\n";
    if (spec.show_labels)
      svg << "<text x=\"" << fmt(sx(pts[i].first) + 7) << "\" y=\""
          << fmt(sy(pts[i].second) - 7) << "\" font-size=\"13\">" << i
          << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sphere12
