#include "sphere12/tammes.hpp"

#include <cmath>
#include <random>

#include "sphere12/parallel.hpp"
#include "sphere12/simplex.hpp"

namespace sphere12 {

namespace {

constexpr double kAntipodalCap = 2 * kPi / 3;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Configuration random_config(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    std::vector<UnitVector> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
      Vec3 v(gauss(rng), gauss(rng), gauss(rng));
      if (v.norm() < 1e-8) {
        --i;
        continue;
      }
      pts.push_back(UnitVector::normalized(v));
    }
    Configuration c(std::move(pts));
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n; ++j)
        if (angular_distance(c[i], c[j]) < 1e-6) {
          distinct = false;
          break;
        }
    if (distinct) return c;
  }
}

double min_pairwise(const Configuration& c) {
  double m = kPi;
  for (int i = 0; i < c.n(); ++i)
    for (int j = i + 1; j < c.n(); ++j)
      m = std::min(m, angular_distance(c[i], c[j]));
  return m;
}

// Smoothed minimum f_beta = -(1/beta) log sum exp(-beta theta_ij), shifted
// for stability. Returns f and the per-point ascent gradient.
double softmin_value_grad(const Configuration& c, double beta,
                          std::vector<Vec3>* grad) {
  const int n = c.n();
  const double m = min_pairwise(c);
  double z = 0;
  if (grad) grad->assign(n, Vec3::Zero());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double th = angular_distance(c[i], c[j]);
      // Pairs beyond 2*pi/3 are never near-minimal for N >= 3 and their
      // distance is non-smooth toward the antipode; cut them off.
      if (th > kAntipodalCap + 0.5) continue;
      const double w = std::exp(-beta * (th - m));
      z += w;
      if (grad) {
        // d theta / d u_i is the unit tangent away from u_j.
        const Vec3 ti = -geodesic_tangent(c[i], c[j]);
        const Vec3 tj = -geodesic_tangent(c[j], c[i]);
        (*grad)[i] += w * ti;
        (*grad)[j] += w * tj;
      }
    }
  if (grad)
    for (Vec3& g : *grad) g /= z;
  return m - std::log(z) / beta;
}

Configuration step_all(const Configuration& c, const std::vector<Vec3>& dir,
                       double step) {
  Configuration out = c;
  for (int i = 0; i < c.n(); ++i)
    out[i] = UnitVector::normalized(c[i].vec() + step * dir[i]);
  return out;
}

void softmin_ascent(Configuration& c, double beta, int iters) {
  std::vector<Vec3> grad;
  double step = 0.1 / beta * 10;
  double f = softmin_value_grad(c, beta, &grad);
  for (int it = 0; it < iters; ++it) {
    double gn2 = 0;
    for (const Vec3& g : grad) gn2 += g.squaredNorm();
    if (gn2 < 1e-24) break;
    bool accepted = false;
    for (int bt = 0; bt < 25; ++bt) {
      Configuration trial = step_all(c, grad, step);
      if (min_pairwise(trial) > kAntipodalCap + 1e-12) {
        step *= 0.5;  // keep the minimum out of the antipodal regime
        continue;
      }
      const double ft = softmin_value_grad(trial, beta, nullptr);
      if (ft > f) {
        c = std::move(trial);
        f = softmin_value_grad(c, beta, &grad);
        step = std::min(step * 1.5, 1.0);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
}

// One LP-polish pass: maximize s subject to a first-order increase of every
// near-minimal pair distance by at least s, with per-coordinate step cap h.
// Returns the attained slack (negative if the LP failed).
double polish_step(const Configuration& c, double h, double window,
                   Configuration* out) {
  const int n = c.n();
  std::vector<std::pair<int, int>> active;
  const double m = min_pairwise(c);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (angular_distance(c[i], c[j]) <= m + window) active.emplace_back(i, j);

  // Tangent bases.
  std::vector<Vec3> e1(n), e2(n);
  for (int i = 0; i < n; ++i) {
    const Vec3 u = c[i].vec();
    Vec3 a = std::abs(u.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
    e1[i] = (a - a.dot(u) * u).normalized();
    e2[i] = u.cross(e1[i]);
  }

  // Variables x = [v_1..v_2n (shifted by +h), s]; v in [0, 2h], s >= 0.
  const int nv = 2 * n + 1;
  const int na = static_cast<int>(active.size());
  LinearProgram lp;
  lp.A = Eigen::MatrixXd::Zero(na + 2 * n, nv);
  lp.b = Eigen::VectorXd::Zero(na + 2 * n);
  lp.c = Eigen::VectorXd::Zero(nv);
  lp.c(2 * n) = -1.0;  // maximize s
  lp.row_type.assign(na + 2 * n, '<');

  for (int r = 0; r < na; ++r) {
    const auto [i, j] = active[r];
    const Vec3 ti = geodesic_tangent(c[i], c[j]);  // toward the partner
    const Vec3 tj = geodesic_tangent(c[j], c[i]);
    // d theta = -(ti . d_i) - (tj . d_j)  >= s
    double coeff[4] = {-ti.dot(e1[i]), -ti.dot(e2[i]), -tj.dot(e1[j]),
                       -tj.dot(e2[j])};
    const int cols[4] = {2 * i, 2 * i + 1, 2 * j, 2 * j + 1};
    double rhs = 0;
    for (int k = 0; k < 4; ++k) {
      lp.A(r, cols[k]) = -coeff[k];
      rhs -= coeff[k] * h;
    }
    lp.A(r, 2 * n) = 1.0;
    lp.b(r) = rhs;
  }
  for (int k = 0; k < 2 * n; ++k) {
    lp.A(na + k, k) = 1.0;
    lp.b(na + k) = 2 * h;
  }

  const LPResult res = solve_lp(lp);
  if (res.status != LPStatus::Optimal) return -1.0;
  const double s = res.x(2 * n);

  Configuration trial = c;
  for (int i = 0; i < n; ++i) {
    const Vec3 d = (res.x(2 * i) - h) * e1[i] + (res.x(2 * i + 1) - h) * e2[i];
    trial[i] = UnitVector::normalized(c[i].vec() + d);
  }
  *out = std::move(trial);
  return s;
}

void lp_polish(Configuration& c, const TammesOptions& opts) {
  double h = 1e-2;
  for (int it = 0; it < opts.polish_iters; ++it) {
    const double m = min_pairwise(c);
    Configuration trial;
    const double window = opts.active_window + 4 * h;
    const double s = polish_step(c, h, window, &trial);
    if (s < 1e-12) break;
    const double mt = min_pairwise(trial);
    if (mt > m && mt <= kAntipodalCap + 1e-12) {
      c = std::move(trial);
      h = std::min(h * 1.5, 1e-2);
    } else {
      h *= 0.5;
      if (h < 1e-13) break;
    }
  }
}

}  // namespace

TammesResult solve(int n, const TammesOptions& opts) {
  if (n < 3) throw std::domain_error("tammes::solve: need N >= 3");
  if (opts.restarts < 1) throw std::domain_error("tammes::solve: restarts >= 1");

  std::vector<double> theta(opts.restarts, -1.0);
  std::vector<Configuration> best(opts.restarts);

  parallel_for(opts.restarts, [&](long k) {
    std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(k + 1)));
    Configuration c = random_config(n, rng);
    for (double beta : opts.betas) softmin_ascent(c, beta, opts.softmin_iters);
    lp_polish(c, opts);
    theta[k] = min_pairwise(c);
    best[k] = std::move(c);
  });

  int arg = 0;
  for (int k = 1; k < opts.restarts; ++k)
    if (theta[k] > theta[arg]) arg = k;

  TammesResult out;
  out.n = n;
  out.config = best[arg];
  out.theta = 2 * injectivity_radius(out.config);
  out.radius = radius_from_angle(out.theta);
  out.config.radius = out.radius;
  out.restarts_used = opts.restarts;
  out.certificate = is_balanced(out.config, out.theta, 1e-7);
  return out;
}

TammesResult solve(int n, int restarts, std::uint64_t seed) {
  TammesOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  return solve(n, opts);
}

double certify_polynomial(const IntegerPolynomial& p, double r) {
  if (p.coeffs.empty() || p.coeffs.back() == 0)
    throw std::domain_error("certify_polynomial: leading coefficient must be nonzero");
  double v = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
    v = v * r + static_cast<double>(*it);
  return std::abs(v);
}

RobinsonGap robinson_gap(int n, int restarts, std::uint64_t seed) {
  if (n < 4) throw std::domain_error("robinson_gap: need N >= 4");
  RobinsonGap g;
  g.r_n = solve(n, restarts, seed).radius;
  g.r_n_minus_1 = solve(n - 1, restarts, seed).radius;
  g.strict = g.r_n < g.r_n_minus_1 - 1e-6;
  return g;
}

}  // namespace sphere12
