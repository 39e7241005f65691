#pragma once

#include <vector>

namespace overrule {

enum class RowSense { le, ge, eq };

// min c'x  s.t.  rows[i]'x {<=,>=,=} rhs[i],  0 <= x <= upper.
struct LpProblem {
  std::vector<double> objective;
  std::vector<double> upper;  // +inf for unbounded-above variables
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

// Dual convention, with d_j = c_j - sum_i y_i A_ij the reduced cost of
// column j at optimality:
//   x_j = 0       =>  d_j >= 0
//   x_j = u_j     =>  d_j <= 0
//   0 < x_j < u_j =>  d_j  = 0
//   >= rows have y_i >= 0, <= rows y_i <= 0, inactive rows y_i = 0, and
//   c'x = y'b + sum over columns at their upper bound of d_j u_j.
struct LpSolution {
  LpStatus status = LpStatus::iteration_limit;
  std::vector<double> x;
  double objective = 0.0;
  std::vector<double> row_duals;
  int iterations = 0;
};

LpSolution solve_lp(const LpProblem& lp, double eps = 1e-9, int max_iterations = 0);

}  // namespace overrule
