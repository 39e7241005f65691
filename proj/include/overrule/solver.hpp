#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "overrule/binarize.hpp"
#include "overrule/bitvec.hpp"
#include "overrule/rules.hpp"

namespace overrule {

// One coverage-constrained minimum-volume rule-learning instance.
// DNF: cover >= coverage_target of positives while paying 1/|negatives| per
// covered negative plus the complexity penalty.
// CNF: learned through the exact complement — an exclusion DNF maximizing
// negative-set coverage minus the penalty, allowed to cover at most
// (1 - coverage_target) of the positives — and returned negated.
struct NpProblem {
  const BinarizedDataset* positives = nullptr;
  const BinarizedDataset* negatives = nullptr;
  double coverage_target = 0.9;
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  RuleForm form = RuleForm::DNF;

  void validate() const;
};

struct SearchConfig {
  int beam_width = 0;        // 0: about one per binarized feature
  int columns_per_iter = 0;  // 0: same as beam_width
  int max_cg_iterations = 10;
  int max_degree = 0;        // 0: 1 + floor(log2(1/lambda1)) when lambda1 > 0, else 5
  double lp_tolerance = 1e-7;
  double reduced_cost_tolerance = 1e-6;
  uint64_t seed = 0;
  std::size_t positives_cap = 20000;

  int resolved_beam_width(std::size_t n_literals) const;
  int resolved_max_degree(double lambda1) const;
};

// Restricted-master state shared across column-generation iterations.
struct LpState {
  std::vector<Conjunction> pool;
  std::vector<double> cost;            // LP objective coefficient per column
  std::vector<BitVec> pos_cover;       // per column over positives
  std::vector<BitVec> neg_cover;       // per column over negatives
  std::vector<std::size_t> pos_count;  // cached popcounts
  std::vector<std::size_t> neg_count;

  std::vector<double> r;    // primal column activations in [0, 1]
  std::vector<double> xi;   // per-positive slack (DNF only)
  std::vector<double> mu;   // per-positive dual
  double budget_dual = 0;   // dual of the aggregate budget row
  double objective = 0;
  double cs_residual = 0;   // max complementary-slackness violation

  // Cut rows accumulated by the DNF master (subsets of positives).
  std::vector<BitVec> cuts;

  std::unordered_set<uint64_t> pool_hashes;
  bool contains(const Conjunction& c) const { return pool_hashes.count(c.hash()) > 0; }
};

// Pool initialized with every degree-1 conjunction plus the all-true column.
LpState init_pool(const NpProblem& problem);

void add_column(LpState& state, const NpProblem& problem, const Conjunction& c);

// Exact solve of the restricted LP relaxation; fills primal/dual fields.
void solve_restricted_lp(LpState& state, const NpProblem& problem, double tol);

// Beam search for up to columns_per_iter new conjunctions with reduced cost
// below -reduced_cost_tolerance at the current duals.
std::vector<Conjunction> price_columns(const LpState& state, const NpProblem& problem,
                                       const SearchConfig& cfg);

// Greedy integer rounding over the final pool.
RuleSet round_greedy(const LpState& state, const NpProblem& problem,
                     const SearchConfig& cfg = {});

// Full column-generation loop: init, iterate LP + pricing, round.
RuleSet fit_np_rules(const NpProblem& problem, const SearchConfig& cfg = {});

// Diagnostic: most negative reduced cost over pooled columns at the stored
// duals (>= -tol certifies dual feasibility of the restricted master).
double min_pool_reduced_cost(const LpState& state, const NpProblem& problem);

}  // namespace overrule
