#include "qpc/keyrate.hpp"

#include <cmath>
#include <stdexcept>

#include "qpc/linalg.hpp"

namespace qpc {

double raw_key_mutual_information(double e) {
  if (e < 0 || e > 0.5) throw std::invalid_argument("error rate out of [0, 1/2]");
  return 1.0 - binary_entropy(e);
}

double ck_rate_lower_bound(double e, double s_ab, int d_ab, int d_e, double b) {
  if (e < 0 || e > 0.5) throw std::invalid_argument("error rate out of [0, 1/2]");
  if (s_ab < 0) throw std::invalid_argument("entropy must be nonnegative");
  if (d_ab < 2 || d_e < 2) throw std::invalid_argument("dimensions must be at least 2");
  double log2_dab = std::log2(static_cast<double>(d_ab));
  double purity_ab = (log2_dab - s_ab) / log2_dab;
  double cap = std::min(log2_dab, std::log2(static_cast<double>(d_e)));
  return 1.0 - binary_entropy(e) - 2.0 * cap * (b - purity_ab);
}

double werner_error_rate(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("Werner parameter out of [0, 1]");
  return 0.5 * (1.0 - p);
}

double werner_entropy_from_error(double e) {
  if (e < 0 || e > 0.5) throw std::invalid_argument("error rate out of [0, 1/2]");
  return shannon_entropy({e / 2, e / 2, e / 2, 1.0 - 1.5 * e});
}

KeyRateScenario werner_scenario(double p) {
  KeyRateScenario sc;
  sc.error_rate = werner_error_rate(p);
  sc.entropy_ab = werner_entropy_from_error(sc.error_rate);
  sc.bound_b = 1.0;
  sc.rate_lower_bound = ck_rate_lower_bound(sc.error_rate, sc.entropy_ab, 4, 4, sc.bound_b);
  return sc;
}

double werner_threshold() {
  auto f = [](double e) {
    return 1.0 - binary_entropy(e) - 2.0 * werner_entropy_from_error(e);
  };
  double lo = 1e-6, hi = 0.25;
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (std::abs(fm) < 1e-10) break;
    (fm > 0 ? lo : hi) = mid;
  }
  return mid;
}

}  // namespace qpc
