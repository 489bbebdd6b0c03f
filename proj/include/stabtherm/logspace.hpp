#pragma once

#include <cmath>
#include <limits>

// Log-domain primitives. Quantities such as <M~>, <M^2> and chi grow like
// 3^k or faster and leave the double range long before the interesting k;
// everything size-dependent is therefore combined through these helpers.

namespace stabtherm {

inline constexpr double kLog3 = 1.0986122886681098;

inline double neg_inf() { return -std::numeric_limits<double>::infinity(); }

// log(e^a + e^b)
inline double log_sum_exp(double a, double b) {
  if (a == neg_inf()) return b;
  if (b == neg_inf()) return a;
  const double m = a > b ? a : b;
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

// log(e^x - 1) for x > 0
inline double log_expm1(double x) {
  if (x > 0.693) return x + std::log1p(-std::exp(-x));
  return std::log(std::expm1(x));
}

// log(1 - e^x) for x < 0
inline double log1m_exp(double x) {
  if (x < -0.693) return std::log1p(-std::exp(x));
  return std::log(-std::expm1(x));
}

// log(e^a - e^b) for a >= b; returns -inf when the difference underflows
inline double log_diff_exp(double a, double b) {
  if (b == neg_inf()) return a;
  if (a <= b) return neg_inf();
  return a + log1m_exp(b - a);
}

// log(sum_{j=0}^{k-1} r^j) given log_r; k >= 0 need not fit an integer type.
// The r -> 1 limit (the removable 0/0 in the geometric closed forms) is
// evaluated by series.
inline double log_geom_sum(double log_r, double k) {
  if (k <= 0) return neg_inf();
  if (k == 1) return 0.0;
  const double x = log_r;
  if (std::fabs(x) * k < 1e-4) {
    // sum = k [1 + x(k-1)/2 + x^2 (k-1)(2k-1)/12 + O((xk)^3)]
    return std::log(k) + std::log1p(x * (k - 1) / 2 + x * x * (k - 1) * (2 * k - 1) / 12);
  }
  if (x < 0) return log1m_exp(k * x) - log1m_exp(x);
  return log_expm1(k * x) - log_expm1(x);
}

}  // namespace stabtherm
