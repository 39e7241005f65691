#include <doctest.h>

#include <cmath>
#include <vector>

#include "overrule/simplex.hpp"

using namespace overrule;

namespace {

struct LpCase {
  int n, m;
  std::vector<double> c;
  std::vector<double> a;  // row-major m x n
  std::vector<int> senses;
  std::vector<double> b;
  std::vector<double> u;
  double expected_objective;
};

#include "oracle/lp_cases.inc"

LpProblem to_problem(const LpCase& cs) {
  LpProblem lp;
  lp.objective = cs.c;
  lp.upper = cs.u;
  for (int i = 0; i < cs.m; ++i) {
    lp.rows.emplace_back(cs.a.begin() + i * cs.n, cs.a.begin() + (i + 1) * cs.n);
    lp.senses.push_back(cs.senses[i] == 0 ? RowSense::le
                        : cs.senses[i] == 1 ? RowSense::ge
                                            : RowSense::eq);
    lp.rhs.push_back(cs.b[i]);
  }
  return lp;
}

// Optimality certificate: primal feasibility, dual sign conditions,
// complementary slackness, and strong duality.
void check_certificate(const LpProblem& lp, const LpSolution& sol, double tol) {
  const std::size_t n = lp.objective.size();
  for (std::size_t j = 0; j < n; ++j) {
    CHECK(sol.x[j] >= -tol);
    CHECK(sol.x[j] <= lp.upper[j] + tol);
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    double lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += lp.rows[i][j] * sol.x[j];
    double slack = lhs - lp.rhs[i];
    switch (lp.senses[i]) {
      case RowSense::le:
        CHECK(slack <= tol);
        CHECK(sol.row_duals[i] <= tol);
        break;
      case RowSense::ge:
        CHECK(slack >= -tol);
        CHECK(sol.row_duals[i] >= -tol);
        break;
      case RowSense::eq:
        CHECK(std::fabs(slack) <= tol);
        break;
    }
    if (lp.senses[i] != RowSense::eq)
      CHECK(std::fabs(sol.row_duals[i] * slack) <= tol * 100);
  }
  double dual_obj = 0;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) dual_obj += sol.row_duals[i] * lp.rhs[i];
  for (std::size_t j = 0; j < n; ++j) {
    double d = lp.objective[j];
    for (std::size_t i = 0; i < lp.rows.size(); ++i) d -= sol.row_duals[i] * lp.rows[i][j];
    if (sol.x[j] <= tol) CHECK(d >= -tol);                       // at lower bound
    if (sol.x[j] >= lp.upper[j] - tol) CHECK(d <= tol);          // at upper bound
    if (sol.x[j] > tol && sol.x[j] < lp.upper[j] - tol) CHECK(std::fabs(d) <= tol);
    if (d < 0) dual_obj += d * lp.upper[j];
  }
  CHECK(sol.objective == doctest::Approx(dual_obj).epsilon(1e-6));
}

}  // namespace

TEST_SUITE("simplex") {

TEST_CASE("frozen random instances match the reference solver") {
  int idx = 0;
  for (const auto& cs : kLpCases) {
    CAPTURE(idx);
    LpProblem lp = to_problem(cs);
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.objective == doctest::Approx(cs.expected_objective).epsilon(1e-7));
    check_certificate(lp, sol, 1e-6);
    ++idx;
  }
}

TEST_CASE("simple bound cases") {
  // min -x s.t. x <= 4, 0 <= x <= 10
  LpProblem lp;
  lp.objective = {-1};
  lp.upper = {10};
  lp.rows = {{1}};
  lp.senses = {RowSense::le};
  lp.rhs = {4};
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.x[0] == doctest::Approx(4.0));
  CHECK(sol.row_duals[0] == doctest::Approx(-1.0));

  // upper bound binds instead of the row
  lp.rhs = {20};
  sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.x[0] == doctest::Approx(10.0));
  CHECK(sol.row_duals[0] == doctest::Approx(0.0));
}

TEST_CASE("infeasible and unbounded detection") {
  LpProblem lp;
  lp.objective = {1, 1};
  lp.upper = {1, 1};
  lp.rows = {{1, 1}};
  lp.senses = {RowSense::ge};
  lp.rhs = {3};  // max attainable is 2
  CHECK(solve_lp(lp).status == LpStatus::infeasible);

  LpProblem lp2;
  lp2.objective = {-1};
  lp2.upper = {std::numeric_limits<double>::infinity()};
  lp2.rows = {{-1}};
  lp2.senses = {RowSense::le};
  lp2.rhs = {0};
  CHECK(solve_lp(lp2).status == LpStatus::unbounded);
}

TEST_CASE("degenerate equality rows") {
  // x1 + x2 = 1 duplicated; min x1
  LpProblem lp;
  lp.objective = {1, 0};
  lp.upper = {1, 1};
  lp.rows = {{1, 1}, {1, 1}};
  lp.senses = {RowSense::eq, RowSense::eq};
  lp.rhs = {1, 1};
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.objective == doctest::Approx(0.0));
  CHECK(sol.x[1] == doctest::Approx(1.0));
}

}  // TEST_SUITE
