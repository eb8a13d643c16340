#pragma once

namespace qpc {

struct KeyRateScenario {
  double error_rate = 0;
  double entropy_ab = 0;       // bits
  double bound_b = 1;          // complementarity constant
  double rate_lower_bound = 0; // bits per signal; negative = bound uninformative
};

// 1 - h(e) for the raw key pair, 0 <= e <= 1/2.
double raw_key_mutual_information(double e);

// Csiszar-Korner lower bound 1 - h(e) - 2*min(log2 d_ab, log2 d_e)*(b - P_AB)
// with P_AB derived from s_ab. Negative values are returned as-is.
double ck_rate_lower_bound(double e, double s_ab, int d_ab, int d_e, double b);

// e = (1 - p)/2 for the Werner state.
double werner_error_rate(double p);

// Shannon entropy of {e/2, e/2, e/2, 1 - 3e/2} in bits.
double werner_entropy_from_error(double e);

// Composed Werner scenario with d_AB = d_E = 4 and b = 1.
KeyRateScenario werner_scenario(double p);

// Root of 1 - h(e) - 2*H({e/2,e/2,e/2,1-3e/2}) on (0, 1/4), by bisection to
// |f| < 1e-10. The rate bound is positive below and negative above it.
double werner_threshold();

}  // namespace qpc
