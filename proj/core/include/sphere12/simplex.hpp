#pragma once

#include <Eigen/Core>

#include <string>

namespace sphere12 {

/// Small dense linear program:
///   minimize c.x  subject to  A x (= | <=) b,  x >= 0.
/// Row i is an equality if row_type[i] == '=' and an upper bound if '<'.
struct LinearProgram {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  std::string row_type;
};

enum class LPStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LPResult {
  LPStatus status = LPStatus::IterationLimit;
  Eigen::VectorXd x;
  double objective = 0;
};

/// Two-phase full-tableau simplex. Dantzig pricing with a Bland fallback once
/// the objective stalls, which is enough anti-cycling for the degenerate
/// force-balance systems this library generates.
LPResult solve_lp(const LinearProgram& lp, int max_iter = 20000);

}  // namespace sphere12
