#include "sphere12/topology.hpp"

#include <sstream>
#include <stdexcept>

namespace sphere12 {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("int64 overflow in topology arithmetic");
  return out;
}

// Product of (1 + k t) for k in [lo, hi]; empty product for hi < lo.
std::vector<std::int64_t> linear_factor_product(int lo, int hi) {
  std::vector<std::int64_t> coeff{1};
  for (int k = lo; k <= hi; ++k) {
    std::vector<std::int64_t> next(coeff.size() + 1, 0);
    for (std::size_t d = 0; d < coeff.size(); ++d) {
      next[d] += coeff[d];
      next[d + 1] += checked_mul(coeff[d], k);
    }
    coeff = std::move(next);
  }
  return coeff;
}

}  // namespace

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::domain_error("factorial: need 0 <= n <= 20");
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f = checked_mul(f, k);
  return f;
}

std::vector<std::int64_t> poincare_polynomial(int n, bool reduced) {
  if (reduced) {
    if (n < 3) throw std::domain_error("poincare_polynomial: reduced needs N >= 3");
    return linear_factor_product(2, n - 2);
  }
  if (n < 1) throw std::domain_error("poincare_polynomial: needs N >= 1");
  return linear_factor_product(1, n - 1);
}

std::int64_t euler_characteristic(int n) {
  if (n < 3) throw std::domain_error("euler_characteristic: need N >= 3");
  const std::int64_t chi = ((n - 3) % 2 == 0 ? 1 : -1) * factorial(n - 3);

  const auto p = poincare_polynomial(n, true);
  std::int64_t at_minus1 = 0, sign = 1;
  for (std::int64_t c : p) {
    at_minus1 += sign * c;
    sign = -sign;
  }
  if (at_minus1 != chi)
    throw std::logic_error("euler_characteristic: P~_N(-1) mismatch");
  return chi;
}

std::int64_t unsigned_stirling_first(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  // c(n+1, k) = c(n, k-1) + n * c(n, k)
  std::vector<std::int64_t> row{1};  // n = 0
  for (int m = 0; m < n; ++m) {
    std::vector<std::int64_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j + 1] += row[j];
      next[j] += checked_mul(row[j], m);
    }
    row = std::move(next);
  }
  return row[k];
}

bool stirling_check(int n, int k) {
  if (k < 0 || k > n - 1) throw std::domain_error("stirling_check: need 0 <= k <= N-1");
  const auto p = poincare_polynomial(n, false);
  const std::int64_t coeff = k < static_cast<int>(p.size()) ? p[k] : 0;
  return coeff == unsigned_stirling_first(n, n - k);
}

std::int64_t component_count(int n, const std::vector<std::int64_t>& aut_orders) {
  const std::int64_t nf = factorial(n);
  std::int64_t s = 0;
  for (std::int64_t a : aut_orders) {
    if (a <= 0 || nf % a != 0)
      throw std::domain_error("component_count: automorphism order must divide N!");
    s += nf / a;
  }
  return s;
}

bool morse_euler_check_n4() {
  // |Sigma_4 / A_4| = 2 maxima (co-index 0), |Sigma_4 / D_4| = 3 saddles
  // (co-index 1).
  const std::int64_t indexed_sum = 2 * 1 + 3 * (-1);
  return indexed_sum == euler_characteristic(4);
}

std::string format_betti_table(int min_n, int max_n, bool reduced) {
  std::ostringstream os;
  std::size_t width = 0;
  std::vector<std::vector<std::int64_t>> rows;
  for (int n = min_n; n <= max_n; ++n) {
    rows.push_back(poincare_polynomial(n, reduced));
    for (std::int64_t c : rows.back())
      width = std::max(width, std::to_string(c).size());
  }
  const std::size_t cols = rows.back().size();
  os << "N\\k";
  for (std::size_t k = 0; k < cols; ++k) {
    std::string h = std::to_string(k);
    os << ' ' << std::string(width > h.size() ? width - h.size() : 0, ' ') << h;
  }
  os << '\n';
  for (int n = min_n; n <= max_n; ++n) {
    const auto& row = rows[n - min_n];
    os << n << (n < 10 ? "  " : " ");
    for (std::size_t k = 0; k < cols; ++k) {
      std::string v = k < row.size() ? std::to_string(row[k]) : "0";
      os << ' ' << std::string(width > v.size() ? width - v.size() : 0, ' ') << v;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace sphere12
