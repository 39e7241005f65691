#include "overrule/synth.hpp"

#include <algorithm>
#include <string>

#include "overrule/errors.hpp"
#include "overrule/rng.hpp"

namespace overrule {

Dataset gen_synthetic(const SynthConfig& cfg) {
  if (cfg.n_samples <= 0 || cfg.n_rare < 0 || cfg.n_common < 0)
    throw ConfigError("synthetic config: sizes must be positive");
  if (cfg.p_rare < 0 || cfg.p_rare > 1 || cfg.p_common < 0 || cfg.p_common > 1)
    throw ConfigError("synthetic config: probabilities must lie in [0, 1]");
  const int ex0 = cfg.excluded_pair.first, ex1 = cfg.excluded_pair.second;
  if (ex0 < 0 || ex1 < 0 || ex0 >= cfg.n_common || ex1 >= cfg.n_common || ex0 == ex1)
    throw ConfigError("synthetic config: excluded_pair must index two distinct common features");

  std::vector<std::string> names;
  for (int j = 1; j <= cfg.n_rare; ++j) names.push_back("r" + std::to_string(j));
  for (int j = 1; j <= cfg.n_common; ++j) names.push_back("c" + std::to_string(j));

  Rng rng(cfg.seed);
  std::vector<std::vector<uint8_t>> rows;
  rows.reserve(static_cast<std::size_t>(cfg.n_samples));
  const std::size_t f0 = static_cast<std::size_t>(cfg.n_rare + ex0);
  const std::size_t f1 = static_cast<std::size_t>(cfg.n_rare + ex1);
  for (int i = 0; i < cfg.n_samples; ++i) {
    std::vector<uint8_t> row(names.size());
    for (int j = 0; j < cfg.n_rare; ++j) row[j] = rng.bernoulli(cfg.p_rare) ? 1 : 0;
    for (int j = 0; j < cfg.n_common; ++j)
      row[cfg.n_rare + j] = rng.bernoulli(cfg.p_common) ? 1 : 0;
    if (row[f0] == 1 && row[f1] == 1) continue;
    rows.push_back(std::move(row));
  }
  return make_binary_dataset(names, rows);
}

bool check_recovery(const RuleSet& support, const SynthConfig& cfg, bool exact) {
  if (support.form != RuleForm::CNF)
    throw ConfigError("recovery is defined for CNF support rules");
  const int f0 = cfg.n_rare + cfg.excluded_pair.first;
  const int f1 = cfg.n_rare + cfg.excluded_pair.second;
  for (const Conjunction& clause : support.clauses) {
    bool has0 = false, has1 = false;
    for (const Literal& lit : clause.literals()) {
      if (lit.op != LitOp::eq || lit.category != 1) continue;
      has0 |= lit.feature == f0;
      has1 |= lit.feature == f1;
    }
    if (!(has0 && has1)) continue;
    if (!exact || clause.degree() == 2) return true;
  }
  return false;
}

}  // namespace overrule
