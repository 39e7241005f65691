#include "overrule/theory.hpp"

#include <cmath>

#include "overrule/errors.hpp"

namespace overrule {

int max_degree(double lambda1) {
  if (lambda1 <= 0.0 || lambda1 > 1.0)
    throw ConfigError("max_degree requires 0 < lambda1 <= 1; supply an explicit cap otherwise");
  return 1 + static_cast<int>(std::floor(std::log2(1.0 / lambda1)));
}

double epsilon_bound(double samples, int dimension, double lambda1, double delta) {
  if (samples < 1.0) throw ConfigError("epsilon_bound requires samples >= 1");
  if (dimension < 1) throw ConfigError("epsilon_bound requires dimension >= 1");
  if (lambda1 <= 0.0 || lambda1 > 1.0) throw ConfigError("epsilon_bound requires 0 < lambda1 <= 1");
  if (delta <= 0.0 || delta >= 1.0) throw ConfigError("epsilon_bound requires 0 < delta < 1");
  const double inv = 1.0 / lambda1;
  const double numerator = inv * std::log(2.0 * dimension) +
                           std::ceil(1.0 + std::log2(inv)) * std::log(inv) +
                           std::log(4.0 / delta);
  return std::sqrt(numerator / (2.0 * samples));
}

double candidate_bound_log(int dimension, double lambda1) {
  if (dimension < 1) throw ConfigError("candidate_bound_log requires dimension >= 1");
  const int p_max = max_degree(lambda1);
  return std::log(2.0) + (1.0 / lambda1) * std::log(2.0 * dimension) +
         p_max * std::log(1.0 / lambda1);
}

TheoryReport theory_report(double m, double n, int d, double lambda1, double delta) {
  TheoryReport rep;
  rep.p_max = max_degree(lambda1);
  rep.epsilon_m = epsilon_bound(m, d, lambda1, delta);
  rep.epsilon_n = epsilon_bound(n, d, lambda1, delta);
  rep.log_candidate_bound = candidate_bound_log(d, lambda1);
  rep.m = m;
  rep.n = n;
  rep.d = d;
  rep.lambda1 = lambda1;
  rep.delta = delta;
  return rep;
}

}  // namespace overrule
