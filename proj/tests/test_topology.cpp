#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sphere12/topology.hpp"

using namespace sphere12;

namespace {
using Row = std::vector<std::int64_t>;
}

TEST_CASE("pure braid Betti table (unreduced)") {
  // Rows of the published table, N = 1..9.
  const std::vector<Row> table{
      {1},
      {1, 1},
      {1, 3, 2},
      {1, 6, 11, 6},
      {1, 10, 35, 50, 24},
      {1, 15, 85, 225, 274, 120},
      {1, 21, 175, 735, 1624, 1764, 720},
      {1, 28, 322, 1960, 6769, 13132, 13068, 5040},
      {1, 36, 546, 4536, 22449, 67284, 118124, 109584, 40320},
  };
  for (int n = 1; n <= 9; ++n)
    CHECK(poincare_polynomial(n, false) == table[n - 1]);

  // Row sums are N!.
  for (int n = 1; n <= 9; ++n) {
    std::int64_t sum = 0;
    for (std::int64_t c : poincare_polynomial(n, false)) sum += c;
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("reduced configuration space Betti table") {
  const std::vector<Row> table{
      {1},
      {1, 2},
      {1, 5, 6},
      {1, 9, 26, 24},
      {1, 14, 71, 154, 120},
      {1, 20, 155, 580, 1044, 720},
      {1, 27, 295, 1665, 5104, 8028, 5040},
      {1, 35, 511, 4025, 18424, 48860, 69264, 40320},
      {1, 44, 826, 8624, 54649, 214676, 509004, 663696, 362880},
      {1, 54, 1266, 16884, 140889, 761166, 2655764, 5753736, 6999840, 3628800},
  };
  for (int n = 3; n <= 12; ++n)
    CHECK(poincare_polynomial(n, true) == table[n - 3]);
  CHECK(poincare_polynomial(12, true)[8] == 6999840);
  CHECK_THROWS_AS(poincare_polynomial(2, true), std::domain_error);
  CHECK_THROWS_AS(poincare_polynomial(0, false), std::domain_error);
}

TEST_CASE("Euler characteristics") {
  CHECK(euler_characteristic(3) == 1);
  CHECK(euler_characteristic(4) == -1);
  CHECK(euler_characteristic(12) == -362880);
  for (int n = 3; n <= 20; ++n) {
    const auto p = poincare_polynomial(n, true);
    std::int64_t alt = 0, sign = 1;
    for (std::int64_t c : p) {
      alt += sign * c;
      sign = -sign;
    }
    CHECK(alt == euler_characteristic(n));
    CHECK(euler_characteristic(n) == ((n - 3) % 2 == 0 ? 1 : -1) * factorial(n - 3));
  }
}

TEST_CASE("Stirling identity") {
  CHECK(unsigned_stirling_first(9, 5) == 22449);
  CHECK(stirling_check(9, 4));
  CHECK(stirling_check(7, 6));
  CHECK(unsigned_stirling_first(7, 1) == 720);
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k < n; ++k) CHECK(stirling_check(n, k));
  CHECK_THROWS_AS(stirling_check(5, 5), std::domain_error);
}

TEST_CASE("component counts") {
  CHECK(component_count(12, {60}) == 7983360);
  CHECK(component_count(4, {12}) == 2);
  CHECK(component_count(12, {24}) == 19958400);
  CHECK(component_count(12, {6}) == 79833600);
  CHECK(component_count(12, {60, 24, 6}) == 7983360 + 19958400 + 79833600);
  CHECK_THROWS_AS(component_count(12, {13}), std::domain_error);
  CHECK_THROWS_AS(component_count(12, {0}), std::domain_error);
}

TEST_CASE("Morse-Euler check for N=4") {
  CHECK(morse_euler_check_n4());
  // Perturbed counts (three maxima) would break the identity.
  CHECK(3 * 1 + 3 * (-1) != euler_characteristic(4));
  // Cross-check against P~_4(-1) = 1 - 2 = -1.
  const auto p4 = poincare_polynomial(4, true);
  CHECK(p4[0] - p4[1] == -1);
}

TEST_CASE("factorial bounds") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(12) == 479001600);
  CHECK(factorial(20) == 2432902008176640000LL);
  CHECK_THROWS_AS(factorial(21), std::domain_error);
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("betti table formatting") {
  const std::string t = format_betti_table(3, 12, true);
  CHECK(t.find("6999840") != std::string::npos);
  CHECK(t.find("N\\k") != std::string::npos);
}
