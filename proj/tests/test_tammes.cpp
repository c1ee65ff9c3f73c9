#include <doctest.h>

#include <cmath>

#include "sphere12/json_io.hpp"
#include "sphere12/named.hpp"
#include "sphere12/permgroup.hpp"
#include "sphere12/tammes.hpp"

using namespace sphere12;

namespace {
double deg(double rad) { return rad * 180.0 / kPi; }
}  // namespace

TEST_CASE("solve recovers the small closed-form optima") {
  const TammesResult r4 = solve(4, 50, 7);
  CHECK(deg(r4.theta) == doctest::Approx(109.4712).epsilon(1e-5));
  CHECK(r4.radius == doctest::Approx(2 + std::sqrt(6.0)).epsilon(1e-6));

  const TammesResult r6 = solve(6, 50, 7);
  CHECK(deg(r6.theta) == doctest::Approx(90.0).epsilon(1e-6));
  CHECK(r6.radius == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-6));

  const TammesResult r3 = solve(3, 30, 7);
  CHECK(deg(r3.theta) == doctest::Approx(120.0).epsilon(1e-6));

  // Returned configuration matches the reference polytope after label
  // matching (greedy nearest assignment inside match_to_reference).
  const Permutation p = match_to_reference(
      rotate_all(align(r4.config, named_tet()).rotation, r4.config), named_tet());
  CHECK(p.n() == 4);
}

TEST_CASE("solve(12) finds the icosahedron") {
  const TammesResult r = solve(12, 150, 3);
  CHECK(deg(r.theta) == doctest::Approx(63.4349).epsilon(2e-5));
  CHECK(r.theta == doctest::Approx(2 * injectivity_radius(r.config)).epsilon(1e-12));
  CHECK(r.radius == doctest::Approx(radius_from_angle(r.theta)).epsilon(1e-14));
  CHECK(r.certificate.balanced);

  // Equivalent to DOD modulo rotation after label matching.
  const AlignmentResult a = align(r.config, named_dod());
  const Permutation m =
      match_to_reference(rotate_all(a.rotation, r.config), named_dod());
  const Configuration relabeled = permute_labels(rotate_all(a.rotation, r.config), m.images());
  CHECK(align(relabeled, named_dod()).rms < 1e-5);
}

TEST_CASE("incumbents never exceed the proven optima") {
  const double table_deg[] = {0,       0,       0,       120.0,   109.4712,
                              90.0,    90.0,    77.8695, 74.8585, 70.5288,
                              66.1468, 63.4349, 63.4349};
  for (int n : {3, 4, 5, 6, 7, 8}) {
    const TammesResult r = solve(n, 40, 11);
    CHECK(deg(r.theta) <= table_deg[n] + 1e-6 * 180 / kPi + 1e-9);
  }
}

TEST_CASE("restart monotonicity and determinism") {
  const TammesResult a1 = solve(9, 5, 42);
  const TammesResult a2 = solve(9, 25, 42);
  CHECK(a2.theta >= a1.theta - 1e-15);  // more restarts never hurt

  const TammesResult b1 = solve(9, 25, 42);
  CHECK(b1.theta == a2.theta);
  CHECK(tammes_result_to_json(b1).dump() == tammes_result_to_json(a2).dump());
}

TEST_CASE("certify_polynomial") {
  // Exact closed-form radii.
  CHECK(certify_polynomial({{-2, -4, 1}}, 2 + std::sqrt(6.0)) < 1e-10);
  CHECK(certify_polynomial({{-1, -2, 2}}, (1 + std::sqrt(3.0)) / 2) < 1e-12);
  CHECK(certify_polynomial({{-1, -2, 1}}, 1 + std::sqrt(2.0)) < 1e-12);

  // Table row N=12 against the solver output.
  const TammesResult r = solve(12, 150, 3);
  CHECK(certify_polynomial({{1, 4, 1, -6, 1}}, r.radius) < 1e-7);

  CHECK_THROWS_AS(certify_polynomial({{}}, 1.0), std::domain_error);
  CHECK_THROWS_AS(certify_polynomial({{1, 0}}, 1.0), std::domain_error);
}

TEST_CASE("robinson gaps") {
  const RobinsonGap g6 = robinson_gap(6, 60, 5);
  CHECK_FALSE(g6.strict);  // r_max(6) = r_max(5) = 1 + sqrt(2)

  const RobinsonGap g7 = robinson_gap(7, 60, 5);
  CHECK(g7.strict);
  CHECK(g7.r_n == doctest::Approx(1.6913).epsilon(1e-3));
  CHECK(g7.r_n_minus_1 == doctest::Approx(2.4142).epsilon(1e-3));
}

TEST_CASE("solver input validation") {
  CHECK_THROWS_AS(solve(2, 10, 1), std::domain_error);
  TammesOptions opts;
  opts.restarts = 0;
  CHECK_THROWS_AS(solve(5, opts), std::domain_error);
}
