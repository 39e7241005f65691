#pragma once

namespace overrule {

// Closed-form diagnostics used for default-setting and reporting.

// Largest useful conjunction degree under a per-literal penalty lambda1:
// 1 + floor(log2(1/lambda1)). Requires 0 < lambda1 <= 1.
int max_degree(double lambda1);

// Sampling-error diagnostic
//   sqrt((lambda1^-1 log(2d) + ceil(1 + log2(1/lambda1)) log(1/lambda1)
//         + log(4/delta)) / (2 samples)).
double epsilon_bound(double samples, int dimension, double lambda1, double delta);

// log of the candidate-rule-count bound:
//   log 2 + (1/lambda1) log(2d) + max_degree(lambda1) * log(1/lambda1).
double candidate_bound_log(int dimension, double lambda1);

struct TheoryReport {
  int p_max = 0;
  double epsilon_m = 0;
  double epsilon_n = 0;
  double log_candidate_bound = 0;
  // Echoed inputs.
  double m = 0, n = 0;
  int d = 0;
  double lambda1 = 0, delta = 0;
};

TheoryReport theory_report(double m, double n, int d, double lambda1, double delta);

}  // namespace overrule
