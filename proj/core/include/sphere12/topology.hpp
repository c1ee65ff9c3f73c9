#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sphere12 {

/// Exact n! for n <= 20 (the int64 range); throws std::domain_error beyond.
std::int64_t factorial(int n);

/// Betti numbers as exact integer coefficients, ascending degree.
///
/// reduced = false: P_N(t) = (1+t)(1+2t)...(1+(N-1)t), the pure-braid-group
/// table (requires N >= 1).
/// reduced = true: P~_N(t) = (1+2t)...(1+(N-2)t), the reduced configuration
/// space of the 2-sphere (requires N >= 3).
std::vector<std::int64_t> poincare_polynomial(int n, bool reduced);

/// chi(BConf(N)) = (-1)^(N-3) (N-3)!, cross-checked against P~_N(-1).
std::int64_t euler_characteristic(int n);

/// Unsigned Stirling number of the first kind [n, k] by its recurrence.
std::int64_t unsigned_stirling_first(int n, int k);

/// Coefficient k of P_N equals [N, N-k].
bool stirling_check(int n, int k);

/// s(N) = sum_i N! / aut_orders[i]; each order must divide N!.
std::int64_t component_count(int n, const std::vector<std::int64_t>& aut_orders);

/// Indexed critical-point sum for N = 4: two maxima minus three saddles
/// reproduces chi(BConf(4)) = -1, also equal to P~_4(-1).
bool morse_euler_check_n4();

/// Rows min_n..max_n of the Betti table, aligned for visual diffing.
std::string format_betti_table(int min_n, int max_n, bool reduced);

}  // namespace sphere12
