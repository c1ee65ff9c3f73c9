#include "sphere12/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace sphere12 {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;

struct Tableau {
  Eigen::MatrixXd t;        // (m+1) x (ncols+1); last row costs, last col rhs
  std::vector<int> basis;   // size m
  int m, ncols;

  double& rhs(int i) { return t(i, ncols); }
  double& cost(int j) { return t(m, j); }
  double objective() const { return -t(m, ncols); }

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int i = 0; i <= m; ++i) {
      if (i == row) continue;
      const double f = t(i, col);
      if (f != 0.0) t.row(i) -= f * t.row(row);
    }
    basis[row] = col;
  }

  // Returns true on optimality, false on unbounded/iteration trouble.
  enum class Run { Optimal, Unbounded, IterLimit };
  Run iterate(const std::vector<bool>& blocked, int max_iter) {
    int stall = 0;
    double last_obj = objective();
    bool bland = false;
    for (int it = 0; it < max_iter; ++it) {
      int enter = -1;
      if (!bland) {
        double best = -kCostTol;
        for (int j = 0; j < ncols; ++j)
          if (!blocked[j] && t(m, j) < best) {
            best = t(m, j);
            enter = j;
          }
      } else {
        for (int j = 0; j < ncols; ++j)
          if (!blocked[j] && t(m, j) < -kCostTol) {
            enter = j;
            break;
          }
      }
      if (enter < 0) return Run::Optimal;

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        const double a = t(i, enter);
        if (a > kPivotTol) {
          const double ratio = rhs(i) / a;
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 &&
               (leave < 0 || basis[i] < basis[leave]))) {
            best_ratio = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return Run::Unbounded;
      pivot(leave, enter);

      const double obj = objective();
      if (obj < last_obj - 1e-13) {
        stall = 0;
        last_obj = obj;
      } else if (++stall > 2 * (m + ncols)) {
        bland = true;  // degenerate cycling guard
      }
    }
    return Run::IterLimit;
  }
};

}  // namespace

LPResult solve_lp(const LinearProgram& lp, int max_iter) {
  const int m = static_cast<int>(lp.A.rows());
  const int n = static_cast<int>(lp.A.cols());

  // Normalize rhs signs, count slacks.
  Eigen::MatrixXd a = lp.A;
  Eigen::VectorXd b = lp.b;
  std::vector<char> type(lp.row_type.begin(), lp.row_type.end());
  for (int i = 0; i < m; ++i) {
    if (b(i) < 0) {
      a.row(i) = -a.row(i);
      b(i) = -b(i);
      if (type[i] == '<') type[i] = '>';
    }
  }
  int nslack = 0;
  for (char t : type)
    if (t != '=') ++nslack;

  Tableau tb;
  tb.m = m;
  tb.ncols = n + nslack + m;  // vars, slacks/surplus, artificials
  tb.t = Eigen::MatrixXd::Zero(m + 1, tb.ncols + 1);
  tb.t.block(0, 0, m, n) = a;
  tb.basis.assign(m, -1);

  std::vector<bool> artificial(tb.ncols, false);
  int sc = n;
  for (int i = 0; i < m; ++i) {
    if (type[i] == '<') {
      tb.t(i, sc) = 1.0;
      tb.basis[i] = sc++;
    } else if (type[i] == '>') {
      tb.t(i, sc++) = -1.0;
    }
    tb.rhs(i) = b(i);
  }
  int ac = n + nslack;
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < 0) {
      tb.t(i, ac) = 1.0;
      artificial[ac] = true;
      tb.basis[i] = ac++;
    }
  }
  const int ncols_used = ac;
  std::vector<bool> blocked(tb.ncols, false);
  for (int j = ncols_used; j < tb.ncols; ++j) blocked[j] = true;

  // Phase 1: minimize the artificial sum; cost row starts as -(sum of rows
  // whose basic variable is artificial) so basic reduced costs are zero.
  for (int i = 0; i < m; ++i)
    if (artificial[tb.basis[i]]) tb.t.row(m) -= tb.t.row(i);
  for (int j = 0; j < tb.ncols; ++j)
    if (artificial[j]) tb.cost(j) += 1.0;

  auto run = tb.iterate(blocked, max_iter);
  if (run == Tableau::Run::IterLimit) return {LPStatus::IterationLimit, {}, 0};
  if (tb.objective() > 1e-8) return {LPStatus::Infeasible, {}, tb.objective()};

  // Drive remaining artificials out of the basis; a row with no eligible
  // pivot is redundant and stays put at value zero with its column blocked.
  for (int i = 0; i < m; ++i) {
    if (!artificial[tb.basis[i]]) continue;
    int col = -1;
    for (int j = 0; j < n + nslack; ++j)
      if (std::abs(tb.t(i, j)) > 1e-8) {
        col = j;
        break;
      }
    if (col >= 0) tb.pivot(i, col);
  }
  for (int j = 0; j < tb.ncols; ++j)
    if (artificial[j]) blocked[j] = true;

  // Phase 2: real costs, re-reduced against the current basis.
  tb.t.row(m).setZero();
  for (int j = 0; j < n; ++j) tb.cost(j) = lp.c(j);
  for (int i = 0; i < m; ++i) {
    const int bj = tb.basis[i];
    const double cb = (bj < n) ? lp.c(bj) : 0.0;
    if (cb != 0.0) tb.t.row(m) -= cb * tb.t.row(i);
  }

  run = tb.iterate(blocked, max_iter);
  if (run == Tableau::Run::Unbounded) return {LPStatus::Unbounded, {}, 0};
  if (run == Tableau::Run::IterLimit) return {LPStatus::IterationLimit, {}, 0};

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] < n) x(tb.basis[i]) = tb.rhs(i);
  return {LPStatus::Optimal, x, lp.c.dot(x)};
}

}  // namespace sphere12
