#include <doctest.h>

#include <numeric>
#include <random>

#include "sphere12/named.hpp"
#include "sphere12/permgroup.hpp"

using namespace sphere12;

namespace {

Permutation cycle(int n, const std::vector<int>& c) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("permutation algebra") {
  const Permutation id = Permutation::identity(5);
  CHECK(id.is_identity());
  CHECK(parity(id) == Parity::Even);

  const Permutation five = cycle(12, {0, 1, 2, 3, 4});
  CHECK(parity(five) == Parity::Even);
  CHECK((five * five.inverse()).is_identity());

  const Permutation three_fours =
      cycle(12, {0, 1, 2, 3}) * cycle(12, {4, 5, 6, 7}) * cycle(12, {8, 9, 10, 11});
  CHECK(parity(three_fours) == Parity::Odd);
  CHECK(three_fours.cycles().size() == 3);

  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::domain_error);

  // Associativity with identity on random words.
  std::mt19937_64 rng(3);
  std::vector<int> img(8);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  const Permutation p(img);
  CHECK((p * Permutation::identity(8)) == p);
  CHECK((Permutation::identity(8) * p) == p);
}

TEST_CASE("group orders: closed forms and brute-force cross-check") {
  CHECK(generated_group_order({cycle(12, {0, 1, 2, 3, 4})}) == 5);

  // S_n from an n-cycle plus a transposition.
  CHECK(generated_group_order({cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})}) == 120);
  CHECK(generated_group_order(
            {cycle(12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}), cycle(12, {0, 1})}) ==
        479001600);

  // A_5 from two 3-cycles.
  CHECK(generated_group_order({cycle(5, {0, 1, 2}), cycle(5, {2, 3, 4})}) == 60);

  // Brute force agrees on small random generator sets.
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Permutation> gens;
    const int n = 5 + static_cast<int>(rng() % 3);
    for (int g = 0; g < 2; ++g) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    const auto brute = brute_force_group_order(gens, 100000);
    CHECK(generated_group_order(gens) == brute);
  }
}

TEST_CASE("match_to_reference on rotated and permuted sets") {
  const Configuration dod = named_dod();
  CHECK(match_to_reference(dod, dod).is_identity());

  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  const Rotation rot = Rotation::about_axis(Vec3(g(rng), g(rng), g(rng)), 1.234);

  std::vector<int> img(12);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  const Configuration moved = rotate_all(rot, permute_labels(dod, img));
  // The icosahedron has a 60-element rotation group, so the recovered match
  // is well defined only up to that symmetry; consistency is what matters:
  // some rotation carries point k exactly onto reference point found(k).
  const Permutation found = match_to_reference(moved, dod);
  std::vector<UnitVector> tgt(12);
  for (int k = 0; k < 12; ++k) tgt[k] = dod[found(k)];
  CHECK(align(moved, Configuration(tgt)).rms < 1e-9);

  CHECK_THROWS_AS(match_to_reference(named_fcc(), dod), std::domain_error);

  // Two nearly coincident reference points make the matching ambiguous.
  Configuration tight(std::vector<UnitVector>{
      UnitVector::from_spherical(1.0, 0.0), UnitVector::from_spherical(1.0, 0.05),
      UnitVector::from_spherical(2.0, 2.0)});
  CHECK_THROWS_AS(match_to_reference(tight, tight), matching_error);
}
