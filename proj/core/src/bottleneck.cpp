#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <set>

#include "sphere12/moves.hpp"
#include "sphere12/named.hpp"
#include "sphere12/parallel.hpp"
#include "sphere12/simplex.hpp"

// Bottleneck configurations of the modified M5 move and the move itself.
//
// Canonical vertex order for pattern work: N=0, U1..U5 = 1..5, V1..V5 = 6..10,
// S=11. The chain N-Uj-Vj-S sits on the Greenwich meridian with N,S displaced
// onto the opposite meridian; longitudes of those four points are pinned and
// the remaining 20 coordinates solve the 20 touching equations.

namespace sphere12 {

namespace {

UnitVector sph(double colat, double lon) {
  return UnitVector::from_spherical(colat, lon);
}

int ui(int i) { return i; }       // U_i, i in 1..5
int vi(int i) { return i + 5; }   // V_i

std::vector<std::pair<int, int>> pattern_extras(int j) {
  switch (j) {
    case 1:
      return {{ui(1), ui(2)}, {vi(2), ui(3)}, {vi(3), ui(4)}, {vi(4), ui(5)},
              {vi(5), vi(1)}};
    case 2:
      return {{ui(2), ui(3)}, {vi(3), ui(4)}, {vi(4), ui(5)}, {vi(5), vi(1)},
              {ui(1), ui(2)}};
    case 3:
      return {{ui(3), ui(4)}, {vi(4), ui(5)}, {vi(5), vi(1)}, {ui(1), vi(2)},
              {ui(2), ui(3)}};
    case 4:
      return {{ui(4), ui(5)}, {vi(5), vi(1)}, {ui(1), vi(2)}, {ui(2), vi(3)},
              {ui(3), ui(4)}};
    case 5:
      return {{vi(5), vi(1)}, {ui(1), vi(2)}, {ui(2), vi(3)}, {ui(3), vi(4)},
              {ui(4), ui(5)}};
    default:
      throw std::domain_error("bottleneck: j must be in 1..5");
  }
}

std::vector<std::pair<int, int>> pattern_equalities(int j) {
  std::set<std::pair<int, int>> s;
  auto add = [&s](int a, int b) { s.emplace(std::min(a, b), std::max(a, b)); };
  for (int i = 1; i <= 5; ++i) {
    add(0, ui(i));
    add(vi(i), 11);
    add(ui(i), vi(i));
  }
  for (const auto& [a, b] : pattern_extras(j)) add(a, b);
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Pattern solver: 20 unknowns (12 colatitudes + 8 free longitudes), 20
// touching equations, solved by Levenberg-Marquardt.
// ---------------------------------------------------------------------------

struct PatternProblem {
  int j;
  double theta;
  std::vector<std::pair<int, int>> eqs;
  std::vector<int> free_lon;  // indices with unpinned longitude

  explicit PatternProblem(int jj, double r) : j(jj), theta(angle_from_radius(r)) {
    eqs = pattern_equalities(j);
    for (int k = 1; k <= 5; ++k) {
      if (k != j) {
        free_lon.push_back(ui(k));
        free_lon.push_back(vi(k));
      }
    }
  }

  int nvar() const { return 12 + static_cast<int>(free_lon.size()); }

  Configuration decode(const Eigen::VectorXd& x) const {
    std::vector<double> lon(12, 0.0);
    lon[0] = lon[11] = kPi;
    for (std::size_t k = 0; k < free_lon.size(); ++k) lon[free_lon[k]] = x(12 + k);
    std::vector<UnitVector> p(12);
    for (int i = 0; i < 12; ++i) p[i] = sph(x(i), lon[i]);
    return Configuration(std::move(p));
  }

  Eigen::VectorXd residual(const Eigen::VectorXd& x) const {
    const Configuration c = decode(x);
    Eigen::VectorXd r(eqs.size());
    for (std::size_t e = 0; e < eqs.size(); ++e)
      r(e) = angular_distance(c[eqs[e].first], c[eqs[e].second]) - theta;
    return r;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    std::vector<double> lon(12, 0.0);
    lon[0] = lon[11] = kPi;
    for (std::size_t k = 0; k < free_lon.size(); ++k) lon[free_lon[k]] = x(12 + k);
    std::vector<Vec3> p(12), dcolat(12), dlon(12);
    for (int i = 0; i < 12; ++i) {
      const double c = x(i), l = lon[i];
      p[i] = Vec3(std::sin(c) * std::cos(l), std::sin(c) * std::sin(l), std::cos(c));
      dcolat[i] =
          Vec3(std::cos(c) * std::cos(l), std::cos(c) * std::sin(l), -std::sin(c));
      dlon[i] = Vec3(-std::sin(c) * std::sin(l), std::sin(c) * std::cos(l), 0);
    }
    std::vector<int> lon_col(12, -1);
    for (std::size_t k = 0; k < free_lon.size(); ++k)
      lon_col[free_lon[k]] = 12 + static_cast<int>(k);

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(eqs.size(), nvar());
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      const auto [a, b] = eqs[e];
      const double dot = std::clamp(p[a].dot(p[b]), -1.0, 1.0);
      const double s = std::sqrt(std::max(1.0 - dot * dot, 1e-16));
      // d acos(pa . pb) = -(pb . dpa + pa . dpb) / sin(d)
      jac(e, a) += -p[b].dot(dcolat[a]) / s;
      jac(e, b) += -p[a].dot(dcolat[b]) / s;
      if (lon_col[a] >= 0) jac(e, lon_col[a]) += -p[b].dot(dlon[a]) / s;
      if (lon_col[b] >= 0) jac(e, lon_col[b]) += -p[a].dot(dlon[b]) / s;
    }
    return jac;
  }

  bool solve(Eigen::VectorXd& x, double tol = 1e-12) const {
    double lambda = 1e-6;
    Eigen::VectorXd r = residual(x);
    double cost = r.squaredNorm();
    for (int it = 0; it < 300; ++it) {
      if (r.cwiseAbs().maxCoeff() < tol) return true;
      const Eigen::MatrixXd jac = jacobian(x);
      const Eigen::MatrixXd h = jac.transpose() * jac;
      const Eigen::VectorXd g = jac.transpose() * r;
      bool stepped = false;
      for (int inner = 0; inner < 40; ++inner) {
        Eigen::MatrixXd damped = h;
        damped.diagonal().array() += lambda;
        const Eigen::VectorXd dx = damped.ldlt().solve(-g);
        Eigen::VectorXd xt = x + dx;
        const Eigen::VectorXd rt = residual(xt);
        if (rt.squaredNorm() < cost) {
          x = std::move(xt);
          r = rt;
          cost = rt.squaredNorm();
          lambda = std::max(lambda / 3, 1e-12);
          stepped = true;
          break;
        }
        lambda *= 10;
        if (lambda > 1e14) return false;
      }
      if (!stepped) return false;
    }
    return r.cwiseAbs().maxCoeff() < tol;
  }

  // All pairs not pinned to theta must clear it.
  bool admissible(const Configuration& c, double slack = 1e-9) const {
    std::set<std::pair<int, int>> eq(eqs.begin(), eqs.end());
    for (int a = 0; a < 12; ++a)
      for (int b = a + 1; b < 12; ++b) {
        if (eq.count({a, b})) continue;
        if (angular_distance(c[a], c[b]) < theta - slack) return false;
      }
    return true;
  }

  Eigen::VectorXd encode(const Configuration& c) const {
    Eigen::VectorXd x(nvar());
    for (int i = 0; i < 12; ++i) x(i) = c[i].colatitude();
    for (std::size_t k = 0; k < free_lon.size(); ++k) {
      double l = c[free_lon[k]].longitude();
      if (l > 1.5 * kPi) l -= 2 * kPi;  // keep continuity around Greenwich
      x(12 + k) = l;
    }
    return x;
  }
};

// Crossing-state heuristic seed: chain on the Greenwich meridian, remaining
// pairs spread at ~72 degrees with crossing offsets by pattern position.
Eigen::VectorXd heuristic_seed(const PatternProblem& pb, int variant,
                               std::uint64_t jitter_seed) {
  const double theta = pb.theta;
  const double eta = std::max((3 * theta - kPi) / 2, 1e-4);
  const double x0 = std::acos(std::clamp(
      (std::cos(theta) + std::cos(theta) * std::cos(theta)) /
          (std::sin(theta) * std::sin(theta)),
      -1.0, 1.0));
  const double g = std::clamp(0.8 * x0 + 0.05 * variant, 0.02, 0.5);

  std::vector<double> colat(12), lon(12, 0.0);
  colat[0] = eta;
  colat[11] = kPi - eta;
  lon[0] = lon[11] = kPi;
  const int j = pb.j;
  colat[ui(j)] = theta - eta;
  colat[vi(j)] = kPi - theta + eta;
  for (int i = 1; i <= 5; ++i) {
    if (i == j) continue;
    const int m = ((i - j) % 5 + 5) % 5;  // 1..4 steps east of the chain
    const double lon_u = m * 2 * kPi / 5;
    // Pairs below j have already crossed (U east of V), pairs above have not.
    const double xoff = i < j ? +g : -g;
    lon[ui(i)] = lon_u;
    lon[vi(i)] = lon_u - xoff;
    colat[ui(i)] = theta;
    colat[vi(i)] = kPi - theta;
  }

  std::mt19937_64 rng(jitter_seed);
  std::normal_distribution<double> noise(0.0, variant == 0 ? 0.0 : 0.015 * variant);
  Eigen::VectorXd x(pb.nvar());
  for (int i = 0; i < 12; ++i) x(i) = colat[i] + (i == 0 || i == 11 ? 0 : noise(rng));
  for (std::size_t k = 0; k < pb.free_lon.size(); ++k)
    x(12 + k) = lon[pb.free_lon[k]] + noise(rng);
  return x;
}

std::optional<Configuration> solve_pattern(int j, double r,
                                           const Configuration* warm) {
  const PatternProblem pb(j, r);
  std::vector<Eigen::VectorXd> seeds;
  if (warm) seeds.push_back(pb.encode(*warm));
  for (int v = 0; v < 10; ++v) seeds.push_back(heuristic_seed(pb, v, 1234 + 7 * v));
  for (Eigen::VectorXd& x : seeds) {
    if (!pb.solve(x)) continue;
    const Configuration c = pb.decode(x);
    if (!pb.admissible(c)) continue;
    return c;
  }
  return std::nullopt;
}

struct BottleneckTable {
  std::array<BottleneckResult, 5> results;
  double min_r1 = 0;
};

const BottleneckTable& bottleneck_table() {
  static BottleneckTable table;
  static std::once_flag once;
  std::call_once(once, [] {
    parallel_for(5, [&](long idx) {
      const int j = static_cast<int>(idx) + 1;
      const double r_lo = 1.0 + 1e-4, r_hi_cap = 1.1085;
      const double step = 2e-3;

      double best_r = -1;
      Configuration best_cfg;
      std::optional<Configuration> warm;
      for (double r = r_lo; r <= r_hi_cap + 1e-12; r += step) {
        auto sol = solve_pattern(j, r, warm ? &*warm : nullptr);
        if (sol) {
          warm = sol;
          best_r = r;
          best_cfg = *sol;
        }
      }
      if (best_r < 0)
        throw numeric_error("bottleneck_radius: no pattern solution found for j=" +
                            std::to_string(j));

      double lo = best_r, hi = std::min(best_r + step, r_hi_cap + step);
      Configuration lo_cfg = best_cfg;
      for (int it = 0; it < 50 && hi - lo > 1e-11; ++it) {
        const double mid = 0.5 * (lo + hi);
        auto sol = solve_pattern(j, mid, &lo_cfg);
        if (sol) {
          lo = mid;
          lo_cfg = *sol;
        } else {
          hi = mid;
        }
      }
      table.results[idx] = {j, lo, lo_cfg};
    });
    table.min_r1 = table.results[0].r1;
    for (const auto& r : table.results) table.min_r1 = std::min(table.min_r1, r.r1);
  });
  return table;
}

}  // namespace

std::vector<std::pair<int, int>> bottleneck_pattern_edges(int j) {
  return pattern_equalities(j);
}

std::optional<Configuration> bottleneck_pattern_at(int j, double r) {
  if (j < 1 || j > 5) throw std::domain_error("bottleneck: j must be in 1..5");
  if (!(r > 1.0)) throw std::domain_error("bottleneck: requires r > 1");
  // Walk up from just above 1 so the continuation seed tracks the branch.
  std::optional<Configuration> warm;
  const double r_lo = 1.0 + 1e-4;
  const int steps = std::max(1, static_cast<int>(std::ceil((r - r_lo) / 2e-3)));
  for (int k = 0; k <= steps; ++k) {
    const double rk = r_lo + (r - r_lo) * k / steps;
    auto sol = solve_pattern(j, rk, warm ? &*warm : nullptr);
    if (sol) warm = sol;
    else if (k == steps) return std::nullopt;
  }
  return solve_pattern(j, r, warm ? &*warm : nullptr);
}

BottleneckResult bottleneck_radius(int j) {
  if (j < 1 || j > 5) throw std::domain_error("bottleneck_radius: j must be in 1..5");
  return bottleneck_table().results[j - 1];
}

double min_bottleneck_radius() { return bottleneck_table().min_r1; }

// ---------------------------------------------------------------------------
// Modified M5: staggered crossings with local detours, built as a verified
// chain of slack-maximized waypoints.
// ---------------------------------------------------------------------------

namespace {

struct CrunchContext {
  double theta;
  std::vector<int> up, down;  // 5 + 5 moving balls
  int pole, anti;

  // East-pointing unit tangent.
  static Vec3 east(const UnitVector& u) {
    const Vec3 v = u.vec();
    const double s = std::hypot(v.x(), v.y());
    if (s < 1e-12) return Vec3(1, 0, 0);
    return Vec3(-v.y() / s, v.x() / s, 0);
  }

  double min_separation(const Configuration& c) const {
    double m = kPi;
    for (int a = 0; a < c.n(); ++a)
      for (int b = a + 1; b < c.n(); ++b)
        m = std::min(m, angular_distance(c[a], c[b]));
    return m;
  }

  // One LP ascent step of the minimum separation, staying on the slice where
  // the mean longitudes of both pentagons are fixed. Returns the LP slack.
  double ascend_step(Configuration& c, double h) const {
    const int n = c.n();
    const double m = min_separation(c);
    std::vector<std::pair<int, int>> active;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (angular_distance(c[a], c[b]) <= m + 4 * h + 1e-6)
          active.emplace_back(a, b);

    std::vector<Vec3> e1(n), e2(n);
    for (int i = 0; i < n; ++i) {
      const Vec3 u = c[i].vec();
      Vec3 a = std::abs(u.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
      e1[i] = (a - a.dot(u) * u).normalized();
      e2[i] = u.cross(e1[i]);
    }

    const int nv = 2 * n + 1;
    const int na = static_cast<int>(active.size());
    LinearProgram lp;
    lp.A = Eigen::MatrixXd::Zero(na + 2 * n + 2, nv);
    lp.b = Eigen::VectorXd::Zero(na + 2 * n + 2);
    lp.c = Eigen::VectorXd::Zero(nv);
    lp.c(2 * n) = -1.0;
    lp.row_type.assign(na + 2 * n + 2, '<');

    for (int rj = 0; rj < na; ++rj) {
      const auto [a, b] = active[rj];
      const Vec3 ta = geodesic_tangent(c[a], c[b]);
      const Vec3 tb = geodesic_tangent(c[b], c[a]);
      const double coeff[4] = {-ta.dot(e1[a]), -ta.dot(e2[a]), -tb.dot(e1[b]),
                               -tb.dot(e2[b])};
      const int cols[4] = {2 * a, 2 * a + 1, 2 * b, 2 * b + 1};
      double rhs = 0;
      for (int k = 0; k < 4; ++k) {
        lp.A(rj, cols[k]) = -coeff[k];
        rhs -= coeff[k] * h;
      }
      lp.A(rj, 2 * n) = 1.0;
      lp.b(rj) = rhs;
    }
    for (int k = 0; k < 2 * n; ++k) {
      lp.A(na + k, k) = 1.0;
      lp.b(na + k) = 2 * h;
    }
    // Mean-longitude pins for both pentagons (equality rows).
    for (int which = 0; which < 2; ++which) {
      const auto& set = which == 0 ? up : down;
      const int row = na + 2 * n + which;
      double rhs = 0;
      for (int i : set) {
        const Vec3 el = east(c[i]);
        const double s = std::max(std::sin(c[i].colatitude()), 1e-6);
        const double ca = el.dot(e1[i]) / s, cb = el.dot(e2[i]) / s;
        lp.A(row, 2 * i) = ca;
        lp.A(row, 2 * i + 1) = cb;
        rhs += ca * h + cb * h;
      }
      lp.b(row) = rhs;
      lp.row_type[row] = '=';
    }

    const LPResult res = solve_lp(lp);
    if (res.status != LPStatus::Optimal) return -1;
    Configuration trial = c;
    for (int i = 0; i < n; ++i) {
      const Vec3 d = (res.x(2 * i) - h) * e1[i] + (res.x(2 * i + 1) - h) * e2[i];
      trial[i] = UnitVector::normalized(c[i].vec() + d);
    }
    if (min_separation(trial) > m) {
      c = std::move(trial);
      return res.x(2 * n);
    }
    return 0.0;
  }

  // Slack-maximizing settle: ascend until the margin target or a stall.
  Configuration settle(Configuration c, double target_margin) const {
    double h = 2e-3;
    for (int it = 0; it < 60; ++it) {
      if (min_separation(c) >= theta + target_margin) break;
      const double s = ascend_step(c, h);
      if (s < 0) break;
      if (s < 1e-11) {
        h *= 0.5;
        if (h < 1e-9) break;
      }
    }
    return c;
  }

  Configuration advance(const Configuration& c, double dpsi) const {
    const Rotation r = Rotation::about_axis(Vec3(0, 0, 1), dpsi);
    Configuration out = c;
    for (int i : up) out[i] = r(c[i]);
    out[pole] = r(c[pole]);
    return out;
  }
};

std::shared_ptr<const PathSegment> slerp_segment(const Configuration& a,
                                                 const Configuration& b,
                                                 const std::string& kind) {
  return std::make_shared<PathSegment>(
      kind, std::map<std::string, double>{}, [a, b](double t) {
        std::vector<UnitVector> p(a.n());
        for (int i = 0; i < a.n(); ++i) {
          const double d = angular_distance(a[i], b[i]);
          if (d < 1e-15) {
            p[i] = a[i];
            continue;
          }
          const Vec3 axis = a[i].vec().cross(b[i].vec());
          if (axis.norm() < 1e-14) {
            p[i] = a[i];
            continue;
          }
          p[i] = Rotation::about_axis(axis, d * t)(a[i]);
        }
        return Configuration(std::move(p));
      });
}

}  // namespace

DeformationPath modified_m5_path(int pole, int direction, double r) {
  if (direction != 1 && direction != -1)
    throw std::domain_error("modified_m5_path: direction must be +1 or -1");
  if (!(r > 1.0))
    throw std::domain_error("modified_m5_path: requires r > 1 (use m5_path)");
  const double r1 = min_bottleneck_radius();
  if (r > r1 + 1e-12)
    throw infeasible_move_error("modified_m5_path: r exceeds the bottleneck radius " +
                                std::to_string(r1));

  const double theta = angle_from_radius(r);
  const Configuration dod = named_dod();
  if (pole < 0 || pole >= 12)
    throw std::domain_error("modified_m5_path: pole must be in 0..11");

  // Work in the pole frame with direction +1 (eastward); direction -1 is
  // the y-mirror of the whole construction, applied at the end.
  const Rotation rot_to_pole = Rotation::taking(dod[pole], sph(0, 0));
  Configuration base = rotate_all(rot_to_pole, dod);
  if (direction == -1)
    for (int i = 0; i < 12; ++i) {
      Vec3 v = base[i].vec();
      base[i] = UnitVector::normalized(Vec3(v.x(), -v.y(), v.z()));
    }

  CrunchContext cx;
  cx.theta = theta;
  cx.pole = pole;
  cx.anti = -1;
  for (int i = 0; i < 12; ++i) {
    if (i == pole) continue;
    const double z = base[i].z();
    if (z < -0.9) cx.anti = i;
    else if (z > 0) cx.up.push_back(i);
    else cx.down.push_back(i);
  }
  auto by_lon = [&](int a, int b) {
    return base[a].longitude() < base[b].longitude();
  };
  std::sort(cx.up.begin(), cx.up.end(), by_lon);
  std::sort(cx.down.begin(), cx.down.end(), by_lon);
  const double colat0 = base[cx.up[0]].colatitude();

  // Gathered rigid state with the upper pentagon advanced by `adv`.
  auto rigid_state = [&](double adv) {
    Configuration c = base;
    for (int k = 0; k < 5; ++k) {
      c[cx.up[k]] = sph(theta, base[cx.up[k]].longitude() + adv);
      c[cx.down[k]] = sph(kPi - theta, base[cx.down[k]].longitude());
    }
    return c;
  };

  // Entry offset: largest pentagon advance for which the rigid state keeps a
  // small positive margin. The pentagons start 36 degrees out of phase.
  const double margin_enter = std::min(5e-4, 0.2 * (r1 - 1.0));
  const double cosx = (std::cos(theta + margin_enter) +
                       std::cos(theta) * std::cos(theta)) /
                      (std::sin(theta) * std::sin(theta));
  const double x_need = cosx >= 1.0 ? 0.0 : std::acos(std::min(cosx, 1.0));
  const double x_enter = std::min(x_need + 0.03, kPi / 5 - 0.01);
  const double adv_enter = kPi / 5 - x_enter;  // rigid advance before the crunch

  std::map<std::string, double> pp{{"r", r},
                                   {"pole", double(pole)},
                                   {"direction", double(direction)}};

  // Waypoints across the crossing region.
  const int grid = 120;
  std::vector<Configuration> way;
  way.push_back(rigid_state(adv_enter));
  const double span = 2 * x_enter;
  const double target = std::min(1e-4, 0.05 * (r1 - 1.0));
  for (int k = 1; k <= grid; ++k) {
    Configuration seed = cx.advance(way.back(), span / grid);
    way.push_back(cx.settle(std::move(seed), target));
  }
  way.push_back(rigid_state(adv_enter + span));

  // Feasibility repair: sample each hop; insert settled midpoints where the
  // interpolation dips below theta.
  for (int round = 0; round < 10; ++round) {
    bool dirty = false;
    std::vector<Configuration> next;
    next.push_back(way.front());
    for (std::size_t k = 0; k + 1 < way.size(); ++k) {
      const auto seg = slerp_segment(way[k], way[k + 1], "probe");
      double worst = kPi;
      for (int s = 1; s < 32; ++s)
        worst = std::min(worst, cx.min_separation(seg->at(s / 32.0)));
      if (worst < theta - 1e-9) {
        Configuration mid = cx.settle(seg->at(0.5), target);
        next.push_back(std::move(mid));
        dirty = true;
      }
      next.push_back(way[k + 1]);
    }
    way = std::move(next);
    if (way.size() > 2000)
      throw numeric_error("modified_m5_path: waypoint refinement diverged");
    if (!dirty) break;
    if (round == 9)
      throw numeric_error("modified_m5_path: crossing region did not verify");
  }

  // Assemble: frame rotation, gather, rigid advance, crunch, rigid advance,
  // spread, frame rotation back. All segments operate on mirrored base when
  // direction == -1, so mirror back at the very end via a wrapper.
  auto maybe_mirror = [direction](Configuration c) {
    if (direction == -1)
      for (int i = 0; i < c.n(); ++i) {
        Vec3 v = c[i].vec();
        c[i] = UnitVector::normalized(Vec3(v.x(), -v.y(), v.z()));
      }
    return c;
  };

  std::vector<std::shared_ptr<const PathSegment>> segs;
  Eigen::AngleAxisd aa(rot_to_pole.matrix());
  const Vec3 axis = aa.axis();
  const double angle = aa.angle();
  // The frame rotation happens in true coordinates; the mirrored frame only
  // exists between gather and spread, whose evals mirror their output back.
  segs.push_back(std::make_shared<PathSegment>(
      "rotate_to_pole", pp, [axis, angle, dod](double t) {
        return rotate_all(Rotation::about_axis(axis, angle * t), dod);
      }));
  segs.push_back(std::make_shared<PathSegment>(
      "m5mod_gather", pp, [base, cx, colat0, theta, maybe_mirror](double t) {
        Configuration c = base;
        const double cu = colat0 + (theta - colat0) * t;
        for (int k = 0; k < 5; ++k) {
          c[cx.up[k]] = sph(cu, base[cx.up[k]].longitude());
          c[cx.down[k]] = sph(kPi - cu, base[cx.down[k]].longitude());
        }
        return maybe_mirror(c);
      }));
  segs.push_back(std::make_shared<PathSegment>(
      "m5mod_advance", pp, [rigid_state, adv_enter, maybe_mirror](double t) {
        return maybe_mirror(rigid_state(adv_enter * t));
      }));
  for (std::size_t k = 0; k + 1 < way.size(); ++k) {
    auto seg = slerp_segment(way[k], way[k + 1], "m5mod_crossing");
    segs.push_back(std::make_shared<PathSegment>(
        "m5mod_crossing", pp,
        [seg, maybe_mirror](double t) { return maybe_mirror(seg->at(t)); }));
  }
  const double adv_exit = adv_enter + span;
  segs.push_back(std::make_shared<PathSegment>(
      "m5mod_advance", pp, [rigid_state, adv_exit, maybe_mirror](double t) {
        return maybe_mirror(rigid_state(adv_exit + (2 * kPi / 5 - adv_exit) * t));
      }));
  segs.push_back(std::make_shared<PathSegment>(
      "m5mod_spread", pp, [base, cx, colat0, theta, maybe_mirror](double t) {
        Configuration c = base;
        const double cu = theta + (colat0 - theta) * t;
        for (int k = 0; k < 5; ++k) {
          c[cx.up[k]] = sph(cu, base[cx.up[k]].longitude() + 2 * kPi / 5);
          c[cx.down[k]] = sph(kPi - cu, base[cx.down[k]].longitude());
        }
        return maybe_mirror(c);
      }));
  const Configuration end_pole_frame = segs.back()->at(1.0);
  const Configuration end_lab =
      rotate_all(Rotation::about_axis(axis, angle).inverse(), end_pole_frame);
  segs.push_back(std::make_shared<PathSegment>(
      "rotate_from_pole", pp, [axis, angle, end_lab](double t) {
        return rotate_all(Rotation::about_axis(axis, angle * (1 - t)), end_lab);
      }));

  DeformationPath path(std::move(segs), r);
  const Configuration end = path.end();
  std::vector<UnitVector> tgt(12);
  for (int k = 0; k < 12; ++k) {
    int bestm = 0;
    double bd = 1e9;
    for (int m = 0; m < 12; ++m) {
      const double d = angular_distance(end[k], dod[m]);
      if (d < bd) {
        bd = d;
        bestm = m;
      }
    }
    tgt[k] = dod[bestm];
  }
  path.declare_target(Configuration(std::move(tgt)));
  return path;
}

}  // namespace sphere12
