#include "sphere12/moves.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>

#include "sphere12/named.hpp"
#include "sphere12/parallel.hpp"

namespace sphere12 {

namespace {

UnitVector sph(double colat, double lon) {
  return UnitVector::from_spherical(colat, lon);
}

double dist_sph(double c1, double l1, double c2, double l2) {
  return angular_distance(sph(c1, l1), sph(c2, l2));
}

}  // namespace

Configuration PathSegment::at(double t) const {
  return eval_(std::clamp(t, 0.0, 1.0));
}

DeformationPath::DeformationPath(
    std::vector<std::shared_ptr<const PathSegment>> segments, double radius)
    : segs_(std::move(segments)), radius_(radius) {
  if (segs_.empty()) throw std::domain_error("DeformationPath: no segments");
  for (std::size_t k = 0; k + 1 < segs_.size(); ++k) {
    const Configuration a = segs_[k]->at(1.0);
    const Configuration b = segs_[k + 1]->at(0.0);
    if (a.n() != b.n()) throw error("DeformationPath: segment size mismatch");
    for (int i = 0; i < a.n(); ++i)
      if ((a[i].vec() - b[i].vec()).norm() > 1e-10)
        throw error("DeformationPath: segments " + std::to_string(k) + " and " +
                    std::to_string(k + 1) + " do not chain continuously");
  }
}

Configuration DeformationPath::at_segment(int k, double local_t) const {
  return segs_.at(k)->at(local_t);
}

Configuration DeformationPath::at(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  const int m = segments();
  const int k = std::min(static_cast<int>(t * m), m - 1);
  return at_segment(k, t * m - k);
}

std::shared_ptr<const PathSegment> reversed(std::shared_ptr<const PathSegment> s) {
  auto params = s->params();
  return std::make_shared<PathSegment>(
      "reversed_" + s->kind(), std::move(params),
      [s](double t) { return s->at(1.0 - t); });
}

std::shared_ptr<const PathSegment> relabeled(std::shared_ptr<const PathSegment> s,
                                             std::vector<int> images) {
  auto params = s->params();
  return std::make_shared<PathSegment>(
      "relabeled_" + s->kind(), std::move(params),
      [s, images](double t) { return permute_labels(s->at(t), images); });
}

PathReport verify_path(const DeformationPath& path, int samples_per_segment) {
  if (samples_per_segment < 2)
    throw std::domain_error("verify_path: samples_per_segment >= 2");
  const double floor = angle_from_radius(path.radius()) - 1e-9;
  const int m = path.segments();
  const long total = static_cast<long>(m) * samples_per_segment;

  std::vector<double> minsep(total);
  parallel_for(total, [&](long idx) {
    const int k = static_cast<int>(idx / samples_per_segment);
    const int i = static_cast<int>(idx % samples_per_segment);
    const Configuration c = path.at_segment(k, double(i) / (samples_per_segment - 1));
    double d = kPi;
    for (int a = 0; a < c.n(); ++a)
      for (int b = a + 1; b < c.n(); ++b)
        d = std::min(d, angular_distance(c[a], c[b]));
    minsep[idx] = d;
  });

  PathReport rep;
  rep.samples = total;
  rep.min_separation = kPi;
  for (long idx = 0; idx < total; ++idx) {
    rep.min_separation = std::min(rep.min_separation, minsep[idx]);
    if (minsep[idx] < floor) {
      const int k = static_cast<int>(idx / samples_per_segment);
      const int i = static_cast<int>(idx % samples_per_segment);
      rep.violation_times.push_back(
          (k + double(i) / (samples_per_segment - 1)) / m);
    }
  }
  if (path.declared_target())
    rep.endpoint_match_rms = align(path.end(), *path.declared_target()).rms;
  return rep;
}

// ---------------------------------------------------------------------------
// M6: DOD -> FCC / HCP
// ---------------------------------------------------------------------------

namespace {

struct M6Chart {
  double theta;    // contact angle theta(r)
  double a0;       // DOD polar colatitude
  double a1;       // phase-1 stop colatitude (= aP unless interior variant)
  double aP;       // mutual-touching parallel
  double beta;     // DOD equatorial colatitude (northern side)
  double s_dir;    // +1 FCC, -1 HCP
  double margin0;  // strict-separation margin scale (interior variant)
  double ramp_k;   // latitude-ramp exponent (interior variant)

  double tri_colat(double t) const {  // phase 2
    return aP + (a1 - aP) * std::pow(1.0 - t, ramp_k);
  }
  double eq_north_colat(double t) const { return beta + (kPi / 2 - beta) * t; }
  double eq_south_colat(double t) const {
    return (kPi - beta) - (kPi / 2 - beta) * t;
  }

  // Minimal longitude increment keeping the north triangle at least
  // theta + margin from the rising Greenwich equatorial ball.
  double phi(double t) const {
    const double margin = margin0 * (1.0 - t);
    const double a = tri_colat(t);
    const double es = eq_south_colat(t);
    const double want = theta + margin;
    if (dist_sph(a, 0, es, 0) >= want) return 0.0;
    double lo = 0.0, hi = kPi / 2;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (dist_sph(a, mid, es, 0) < want ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

  Configuration phase2(double t) const {
    const double a = tri_colat(t);
    const double f = phi(t);
    std::vector<UnitVector> p(12);
    for (int k = 0; k < 3; ++k) {
      p[k] = sph(a, k * 2 * kPi / 3 + f);
      p[9 + k] = sph(kPi - a, kPi / 3 + k * 2 * kPi / 3 + s_dir * f);
    }
    const double en = eq_north_colat(t), es = eq_south_colat(t);
    for (int k = 0; k < 6; ++k)
      p[3 + k] = sph(k % 2 == 0 ? es : en, k * kPi / 3);
    return Configuration(std::move(p));
  }

  Configuration phase1(double t) const {
    Configuration c = named_dod();
    const double a = a0 + (a1 - a0) * t;
    for (int k = 0; k < 3; ++k) {
      c[k] = sph(a, k * 2 * kPi / 3);
      c[9 + k] = sph(kPi - a, kPi / 3 + k * 2 * kPi / 3);
    }
    return c;
  }
};

M6Chart make_m6_chart(M6Variant variant, double r, double eps) {
  if (!(r > 0)) throw std::domain_error("m6_path: radius must be positive");
  if (r > 1.0)
    throw infeasible_move_error(
        "m6_path: the equatorial 6-ring requires r <= 1");
  if (eps < 0) throw std::domain_error("m6_path: interior_eps must be >= 0");
  M6Chart ch;
  ch.theta = angle_from_radius(r);
  ch.a0 = dod_polar_colatitude();
  ch.aP = triangle_colatitude(ch.theta);
  ch.beta = dod_equatorial_colatitude();
  ch.s_dir = variant == M6Variant::FCC ? 1.0 : -1.0;
  const double dod_min = 2 * injectivity_radius(named_dod());
  if (ch.theta + eps >= dod_min - 1e-9)
    throw std::domain_error("m6_path: interior_eps too large for this radius");
  ch.a1 = eps > 0 ? triangle_colatitude(ch.theta + eps) : ch.aP;
  ch.margin0 = 0;
  ch.ramp_k = 1;
  return ch;
}

// Strictness scan used to pick the interior-variant ramp parameters.
bool interior_strict(const M6Chart& ch, int samples) {
  for (int i = 1; i < samples; ++i) {
    const double t = double(i) / samples;
    const Configuration c = ch.phase2(t);
    for (int a = 0; a < 12; ++a)
      for (int b = a + 1; b < 12; ++b)
        if (angular_distance(c[a], c[b]) <= ch.theta + 1e-12) return false;
  }
  return true;
}

}  // namespace

DeformationPath m6_path(M6Variant variant, double r, double interior_eps) {
  M6Chart ch = make_m6_chart(variant, r, interior_eps);

  if (interior_eps > 0) {
    ch.margin0 = std::min(interior_eps / 2, 5e-4);
    bool ok = false;
    for (double k : {1.0, 2.0, 4.0, 8.0, 16.0}) {
      ch.ramp_k = k;
      if (interior_strict(ch, 2000)) {
        ok = true;
        break;
      }
    }
    if (!ok)
      throw numeric_error("m6_path: no strictly interior ramp found");
  }

  std::map<std::string, double> p1{{"r", r}, {"interior_eps", interior_eps}};
  std::map<std::string, double> p2 = p1;
  p2["variant_fcc"] = variant == M6Variant::FCC ? 1 : 0;
  p2["ramp_exponent"] = ch.ramp_k;

  auto seg1 = std::make_shared<PathSegment>(
      "m6_phase1", p1, [ch](double t) { return ch.phase1(t); });
  auto seg2 = std::make_shared<PathSegment>(
      "m6_phase2", p2, [ch](double t) { return ch.phase2(t); });

  DeformationPath path({seg1, seg2}, r);
  if (std::abs(r - 1.0) < 1e-12 && interior_eps == 0)
    path.declare_target(variant == M6Variant::FCC ? named_fcc() : named_hcp());
  return path;
}

double m6_phase2_increment(double t, double r) {
  return make_m6_chart(M6Variant::FCC, r, 0).phi(t);
}

std::pair<double, double> lemma57_lengths(double t) {
  const M6Chart ch = make_m6_chart(M6Variant::FCC, 1.0, 0);
  const double es = ch.eq_south_colat(t), en = ch.eq_north_colat(t);
  // A rises along Greenwich, B descends along longitude pi/3; O sits on the
  // parallel aP, equidistant from both.
  double lo = 0.0, hi = kPi / 3;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double g =
        dist_sph(ch.aP, mid, es, 0.0) - dist_sph(ch.aP, mid, en, kPi / 3);
    (g < 0 ? lo : hi) = mid;
  }
  const double psi = 0.5 * (lo + hi);
  return {dist_sph(ch.aP, psi, es, 0.0), dist_sph(ch.aP, psi, en, kPi / 3)};
}

bool lemma57_check(const std::vector<double>& t_grid) {
  for (double t : t_grid) {
    if (!(t > 0 && t < 1))
      throw std::domain_error("lemma57_check: t values must lie in (0,1)");
    const auto [ao, bo] = lemma57_lengths(t);
    if (!(ao > kPi / 3) || std::abs(ao - bo) > 1e-12) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// M5: the 5-ball polar rotation
// ---------------------------------------------------------------------------

namespace {

struct M5Frame {
  Configuration base;       // DOD rotated so the pole ball sits at +z
  std::vector<int> up;      // the 5 northern indices
  std::vector<int> down;    // the 5 southern indices
  int pole = -1, anti = -1;
  double colat0 = 0;        // icosahedron edge angle
  Vec3 axis;                // lab->pole frame rotation
  double angle = 0;
};

M5Frame make_m5_frame(int pole) {
  const Configuration dod = named_dod();
  if (pole < 0 || pole >= 12) throw std::domain_error("m5: pole must be in 0..11");
  M5Frame f;
  f.pole = pole;
  const Rotation rot = Rotation::taking(dod[pole], UnitVector::from_spherical(0, 0));
  f.base = rotate_all(rot, dod);
  Eigen::AngleAxisd aa(rot.matrix());
  f.axis = aa.axis();
  f.angle = aa.angle();
  for (int i = 0; i < 12; ++i) {
    if (i == pole) continue;
    const double z = f.base[i].z();
    if (z > 0.9)
      throw error("m5: duplicate polar ball");
    else if (z < -0.9)
      f.anti = i;
    else if (z > 0)
      f.up.push_back(i);
    else
      f.down.push_back(i);
  }
  auto by_lon = [&](int a, int b) {
    return f.base[a].longitude() < f.base[b].longitude();
  };
  std::sort(f.up.begin(), f.up.end(), by_lon);
  std::sort(f.down.begin(), f.down.end(), by_lon);
  f.colat0 = f.base[f.up[0]].colatitude();
  return f;
}

// Gather/spread segment: the ten non-polar balls slide along meridians
// between the DOD colatitude and the touching colatitude theta.
Configuration m5_slide(const M5Frame& f, const std::vector<double>& up_lons,
                       const std::vector<double>& down_lons, double c_from,
                       double c_to, double t) {
  Configuration c = f.base;
  const double cu = c_from + (c_to - c_from) * t;
  for (int k = 0; k < 5; ++k) {
    c[f.up[k]] = sph(cu, up_lons[k]);
    c[f.down[k]] = sph(kPi - cu, down_lons[k]);
  }
  return c;
}

}  // namespace

double m5_phase1_gap() { return 2 * kPi / 5 - std::acos(1.0 / 3.0); }

DeformationPath m5_path(int pole, int direction, double r) {
  if (direction != 1 && direction != -1)
    throw std::domain_error("m5_path: direction must be +1 or -1");
  if (!(r > 0)) throw std::domain_error("m5_path: radius must be positive");
  if (r > 1.0)
    throw infeasible_move_error("m5_path: requires r <= 1 (see modified_m5_path)");

  const M5Frame f = make_m5_frame(pole);
  const double theta = angle_from_radius(r);
  const Configuration dod = named_dod();

  std::vector<double> up_lons, down_lons, up_lons_adv;
  for (int k = 0; k < 5; ++k) {
    up_lons.push_back(f.base[f.up[k]].longitude());
    down_lons.push_back(f.base[f.down[k]].longitude());
    up_lons_adv.push_back(up_lons.back() + direction * 2 * kPi / 5);
  }

  std::map<std::string, double> pp{{"r", r},
                                   {"pole", double(pole)},
                                   {"direction", double(direction)}};

  auto rot_in = std::make_shared<PathSegment>(
      "rotate_to_pole", pp, [f, dod](double t) {
        return rotate_all(Rotation::about_axis(f.axis, f.angle * t), dod);
      });
  auto gather = std::make_shared<PathSegment>(
      "m5_phase1", pp, [f, up_lons, down_lons, theta](double t) {
        return m5_slide(f, up_lons, down_lons, f.colat0, theta, t);
      });
  auto spin = std::make_shared<PathSegment>(
      "m5_phase2", pp, [f, up_lons, down_lons, theta, direction](double t) {
        std::vector<double> lons = up_lons;
        for (double& l : lons) l += direction * 2 * kPi / 5 * t;
        return m5_slide(f, lons, down_lons, theta, theta, 0.0);
      });
  auto spread = std::make_shared<PathSegment>(
      "m5_phase3", pp, [f, up_lons_adv, down_lons, theta](double t) {
        return m5_slide(f, up_lons_adv, down_lons, theta, f.colat0, t);
      });
  const Configuration end_pole_frame = spread->at(1.0);
  const Configuration end_lab =
      rotate_all(Rotation::about_axis(f.axis, f.angle).inverse(), end_pole_frame);
  auto rot_out = std::make_shared<PathSegment>(
      "rotate_from_pole", pp, [f, end_lab](double t) {
        return rotate_all(Rotation::about_axis(f.axis, f.angle * (1 - t)), end_lab);
      });

  DeformationPath path({rot_in, gather, spin, spread, rot_out}, r);

  // Endpoint lands exactly on the DOD point set; declare the relabeled chart
  // as the target so verify_path checks construction exactness.
  const Configuration end = path.end();
  std::vector<UnitVector> tgt(12);
  for (int k = 0; k < 12; ++k) {
    int best = -1;
    double bd = 1e9;
    for (int m = 0; m < 12; ++m) {
      const double d = angular_distance(end[k], dod[m]);
      if (d < bd) {
        bd = d;
        best = m;
      }
    }
    tgt[k] = dod[best];
  }
  path.declare_target(Configuration(std::move(tgt)));
  return path;
}

}  // namespace sphere12
