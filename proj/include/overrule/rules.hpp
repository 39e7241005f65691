#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "overrule/dataset.hpp"

namespace overrule {

enum class LitOp : uint8_t { le, gt, eq, ne };

// One threshold or category condition on a single feature.
struct Literal {
  int feature = -1;
  LitOp op = LitOp::le;
  double value = 0.0;   // threshold (continuous)
  int category = -1;    // category index (categorical / binary)
  double fraction = 0;  // share of the feature's range or category count

  bool holds_numeric(double x) const {
    return op == LitOp::le ? x <= value : x > value;
  }
  bool holds_coded(int32_t c) const {
    return op == LitOp::eq ? c == category : c != category;
  }

  // Total order used for canonical sorting, equality and hashing.
  friend auto operator<=>(const Literal& a, const Literal& b) = default;

  std::string to_string(const std::vector<FeatureMeta>& features) const;
};

// Conjunction of literals with a canonical representation: literals sorted,
// same-(feature, op) conditions merged, contradictions rejected at build
// time. The degree-0 conjunction is the designated all-true clause.
class Conjunction {
 public:
  Conjunction() = default;  // all-true
  explicit Conjunction(std::vector<Literal> literals);

  static Conjunction all_true() { return Conjunction(); }

  // Returns nullopt when the extension is contradictory or touches an
  // already-constrained (feature, op) slot.
  std::optional<Conjunction> extended(const Literal& lit) const;

  const std::vector<Literal>& literals() const { return lits_; }
  int degree() const { return static_cast<int>(lits_.size()); }
  bool is_all_true() const { return lits_.empty(); }

  uint64_t hash() const;
  friend auto operator<=>(const Conjunction&, const Conjunction&) = default;

  std::string to_string(const std::vector<FeatureMeta>& features,
                        const std::string& joiner = " and ") const;

 private:
  std::vector<Literal> lits_;
};

enum class RuleForm : uint8_t { DNF, CNF };

struct RuleSetProvenance {
  double objective = 0.0;        // value of the fitted objective for the rule
  double lp_objective = 0.0;     // relaxation objective at rounding time
  double coverage = 0.0;         // achieved coverage fraction of the target set
  bool coverage_shortfall = false;
  int cg_iterations = 0;
  std::vector<std::string> warnings;
};

// DNF: row covered iff some clause holds. CNF is stored as the exclusion
// DNF over `clauses` and covers a row iff none of them hold.
struct RuleSet {
  RuleForm form = RuleForm::DNF;
  std::vector<Conjunction> clauses;
  RuleSetProvenance provenance;

  std::size_t literal_count() const;
};

class BinarizedDataset;  // binarize.hpp

bool eval_conjunction(const Conjunction& c, const BinarizedDataset& data, std::size_t row);
bool eval_ruleset(const RuleSet& r, const BinarizedDataset& data, std::size_t row);

// Product of per-feature covered fractions under the uniform reference
// measure; multiple literals on one feature combine by interval/set
// intersection before the product is taken.
double exact_clause_volume(const Conjunction& c, const std::vector<FeatureMeta>& features);

// K * lambda0 + lambda1 * sum of degrees; degree-0 (all-true) clauses and the
// empty rule contribute nothing.
double complexity(const RuleSet& r, double lambda0, double lambda1);

}  // namespace overrule
