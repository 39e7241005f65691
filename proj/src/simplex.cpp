#include "overrule/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "overrule/errors.hpp"

namespace overrule {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarStatus : uint8_t { basic, at_lower, at_upper };

// Two-phase primal simplex with bounded variables on a dense tableau.
// Columns: [structural | slack/surplus | artificial]; every row gets an
// artificial so the initial basis is the identity and row duals can be read
// off the artificial columns at the end (B^-1 e_i).
class Tableau {
 public:
  Tableau(const LpProblem& lp, double eps) : eps_(eps), n_(lp.objective.size()) {
    m_ = lp.rows.size();
    n_slack_ = 0;
    for (auto s : lp.senses)
      if (s != RowSense::eq) ++n_slack_;
    total_ = n_ + n_slack_ + m_;

    cost_.assign(total_, 0.0);
    upper_.assign(total_, kInf);
    for (std::size_t j = 0; j < n_; ++j) upper_[j] = lp.upper[j];

    T_.assign(m_, std::vector<double>(total_, 0.0));
    beta_.assign(m_, 0.0);
    basis_.assign(m_, 0);
    row_flip_.assign(m_, 1.0);
    art_col_.assign(m_, 0);
    status_.assign(total_, VarStatus::at_lower);

    std::size_t slack = n_;
    for (std::size_t i = 0; i < m_; ++i) {
      double flip = lp.rhs[i] < 0.0 ? -1.0 : 1.0;
      row_flip_[i] = flip;
      for (std::size_t j = 0; j < n_; ++j) T_[i][j] = flip * lp.rows[i][j];
      if (lp.senses[i] == RowSense::le)
        T_[i][slack++] = flip * 1.0;
      else if (lp.senses[i] == RowSense::ge)
        T_[i][slack++] = flip * -1.0;
      std::size_t art = n_ + n_slack_ + i;
      T_[i][art] = 1.0;
      art_col_[i] = art;
      beta_[i] = flip * lp.rhs[i];
      basis_[i] = art;
      status_[art] = VarStatus::basic;
    }
  }

  LpSolution run(const LpProblem& lp, int max_iterations) {
    LpSolution sol;
    int budget = max_iterations > 0 ? max_iterations
                                    : 200 * static_cast<int>(m_ + total_) + 2000;

    // Phase 1: drive artificials to zero.
    for (std::size_t i = 0; i < m_; ++i) cost_[art_col_[i]] = 1.0;
    LpStatus st = iterate(budget, sol.iterations);
    if (st == LpStatus::iteration_limit) {
      sol.status = st;
      return sol;
    }
    double rhs_scale = 1.0;
    for (double b : lp.rhs) rhs_scale = std::max(rhs_scale, std::fabs(b));
    if (current_objective() > 1e-7 * rhs_scale * std::max<std::size_t>(1, m_)) {
      sol.status = LpStatus::infeasible;
      return sol;
    }
    pivot_out_artificials();

    // Phase 2: original costs; artificials pinned at zero.
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = lp.objective[j];
    for (std::size_t i = 0; i < m_; ++i) upper_[art_col_[i]] = 0.0;
    st = iterate(budget, sol.iterations);
    sol.status = st;
    if (st != LpStatus::optimal) return sol;

    sol.x.assign(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j)
      if (status_[j] == VarStatus::at_upper) sol.x[j] = upper_[j];
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) sol.x[basis_[i]] = beta_[i];
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n_; ++j) sol.objective += lp.objective[j] * sol.x[j];

    // y = c_B' B^-1, read from the artificial columns, mapped back through
    // the row sign flips applied at setup.
    sol.row_duals.assign(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      double y = 0.0;
      for (std::size_t r = 0; r < m_; ++r) y += cost_[basis_[r]] * T_[r][art_col_[i]];
      sol.row_duals[i] = row_flip_[i] * y;
    }
    return sol;
  }

 private:
  double current_objective() const {
    double obj = 0.0;
    for (std::size_t i = 0; i < m_; ++i) obj += cost_[basis_[i]] * beta_[i];
    for (std::size_t j = 0; j < total_; ++j)
      if (status_[j] == VarStatus::at_upper) obj += cost_[j] * upper_[j];
    return obj;
  }

  std::vector<double> reduced_costs() const {
    std::vector<double> d(cost_);
    for (std::size_t i = 0; i < m_; ++i) {
      double cb = cost_[basis_[i]];
      if (cb == 0.0) continue;
      const auto& row = T_[i];
      for (std::size_t j = 0; j < total_; ++j) d[j] -= cb * row[j];
    }
    return d;
  }

  LpStatus iterate(int budget, int& iterations) {
    int stall = 0;
    double last_obj = current_objective();
    while (true) {
      if (iterations++ >= budget) return LpStatus::iteration_limit;
      const bool bland = stall > static_cast<int>(2 * (m_ + total_)) + 50;
      const auto d = reduced_costs();

      // Entering variable: profitable direction respecting its bound status.
      std::size_t enter = total_;
      double best = -eps_;
      for (std::size_t j = 0; j < total_; ++j) {
        if (status_[j] == VarStatus::basic || upper_[j] <= 0.0) continue;
        double viol = status_[j] == VarStatus::at_lower ? d[j] : -d[j];
        if (viol < (bland ? -eps_ : best)) {
          best = viol;
          enter = j;
          if (bland) break;
        }
      }
      if (enter == total_) return LpStatus::optimal;

      const double dir = status_[enter] == VarStatus::at_lower ? 1.0 : -1.0;
      const double piv_tol = std::max(eps_, 1e-7);
      // x_B moves by -t * dir * T[:,enter] as the entering variable moves t.
      double t_max = upper_[enter] < kInf ? upper_[enter] : kInf;  // own bound flip
      std::ptrdiff_t leave = -1;                                   // -1: bound flip
      bool leave_at_upper = false;
      for (std::size_t i = 0; i < m_; ++i) {
        double v = dir * T_[i][enter];
        double limit = kInf;
        bool hits_upper = false;
        if (v > piv_tol) {
          limit = std::max(0.0, beta_[i]) / v;
        } else if (v < -piv_tol && upper_[basis_[i]] < kInf) {
          limit = std::max(0.0, upper_[basis_[i]] - beta_[i]) / (-v);
          hits_upper = true;
        } else {
          continue;
        }
        if (limit < t_max - eps_ ||
            (limit < t_max + eps_ && leave >= 0 && basis_[i] < basis_[leave])) {
          t_max = std::max(0.0, limit);
          leave = static_cast<std::ptrdiff_t>(i);
          leave_at_upper = hits_upper;
        }
      }
      if (t_max == kInf) return LpStatus::unbounded;

      if (t_max > eps_)
        stall = 0;
      else
        ++stall;

      for (std::size_t i = 0; i < m_; ++i) beta_[i] -= t_max * dir * T_[i][enter];

      if (leave < 0) {
        // The entering variable runs to its opposite bound; basis unchanged.
        status_[enter] =
            status_[enter] == VarStatus::at_lower ? VarStatus::at_upper : VarStatus::at_lower;
        continue;
      }

      std::size_t r = static_cast<std::size_t>(leave);
      std::size_t out = basis_[r];
      status_[out] = leave_at_upper ? VarStatus::at_upper : VarStatus::at_lower;
      double enter_start = status_[enter] == VarStatus::at_lower ? 0.0 : upper_[enter];
      beta_[r] = enter_start + dir * t_max;
      basis_[r] = enter;
      status_[enter] = VarStatus::basic;

      // Gaussian elimination on the pivot column.
      double piv = T_[r][enter];
      double inv = 1.0 / piv;
      for (std::size_t j = 0; j < total_; ++j) T_[r][j] *= inv;
      T_[r][enter] = 1.0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == r) continue;
        double factor = T_[i][enter];
        if (factor == 0.0) continue;
        for (std::size_t j = 0; j < total_; ++j) T_[i][j] -= factor * T_[r][j];
        T_[i][enter] = 0.0;
      }

      double obj = current_objective();
      if (obj < last_obj - eps_) {
        last_obj = obj;
        stall = 0;
      }
    }
  }

  // Degenerate basic artificials are swapped for any structural/slack column
  // with a nonzero tableau entry; fully zero rows are redundant and keep the
  // artificial pinned at zero.
  void pivot_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_ + n_slack_) continue;
      std::size_t enter = total_;
      for (std::size_t j = 0; j < n_ + n_slack_; ++j) {
        if (status_[j] == VarStatus::basic) continue;
        if (std::fabs(T_[i][j]) > 1e3 * eps_) {
          enter = j;
          break;
        }
      }
      if (enter == total_) continue;
      std::size_t out = basis_[i];
      status_[out] = VarStatus::at_lower;
      basis_[i] = enter;
      status_[enter] = VarStatus::basic;
      double inv = 1.0 / T_[i][enter];
      for (std::size_t j = 0; j < total_; ++j) T_[i][j] *= inv;
      T_[i][enter] = 1.0;
      beta_[i] *= inv;
      for (std::size_t r = 0; r < m_; ++r) {
        if (r == i) continue;
        double factor = T_[r][enter];
        if (factor == 0.0) continue;
        for (std::size_t j = 0; j < total_; ++j) T_[r][j] -= factor * T_[i][j];
        T_[r][enter] = 0.0;
        beta_[r] -= factor * beta_[i];
      }
    }
  }

  double eps_;
  std::size_t n_ = 0, m_ = 0, n_slack_ = 0, total_ = 0;
  std::vector<std::vector<double>> T_;
  std::vector<double> beta_;
  std::vector<double> cost_;
  std::vector<double> upper_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> art_col_;
  std::vector<double> row_flip_;
  std::vector<VarStatus> status_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& lp, double eps, int max_iterations) {
  const std::size_t n = lp.objective.size();
  if (lp.upper.size() != n) throw SolverError("lp: bounds size mismatch");
  if (lp.rows.size() != lp.senses.size() || lp.rows.size() != lp.rhs.size())
    throw SolverError("lp: row description size mismatch");
  for (const auto& row : lp.rows)
    if (row.size() != n) throw SolverError("lp: row width mismatch");
  Tableau tab(lp, eps);
  return tab.run(lp, max_iterations);
}

}  // namespace overrule
