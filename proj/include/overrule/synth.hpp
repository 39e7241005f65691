#pragma once

#include <cstdint>
#include <utility>

#include "overrule/dataset.hpp"
#include "overrule/rules.hpp"

namespace overrule {

// Benchmark generator: independent Bernoulli features, with every row
// satisfying both features of `excluded_pair` removed afterwards. Rare
// features are named r1..r<n_rare>, common ones c1..c<n_common>; the pair
// indexes the common block.
struct SynthConfig {
  int n_samples = 10000;
  int n_rare = 10;
  int n_common = 12;
  double p_rare = 0.01;
  double p_common = 0.5;
  std::pair<int, int> excluded_pair = {10, 11};  // c11 and c12
  uint64_t seed = 0;
};

Dataset gen_synthetic(const SynthConfig& cfg);

// True iff some clause of the CNF support rule is exactly the planted
// exclusion (both pair features = 1 and nothing else). With exact=false a
// clause merely containing both pair literals qualifies.
bool check_recovery(const RuleSet& support, const SynthConfig& cfg, bool exact = true);

}  // namespace overrule
