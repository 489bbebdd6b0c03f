#pragma once

#include <vector>

#include "stabtherm/structures.hpp"

namespace stabtherm {

// Temperature of the finite-size susceptibility maximum. chi_star saturates
// to inf past the double range; log_chi_star always holds the value.
struct CriticalPoint {
  StructureSpec spec;
  double t_star = 0;
  double chi_star = 0;
  double log_chi_star = 0;
  bool grid_unimodal = true;
};

// Global maximum of T -> chi(spec, T) over a 200-point logarithmic bracket
// on [1e-3, 10], refined by golden-section to |dT| <= tol. Searches in log
// chi so arbitrarily large systems stay in range.
CriticalPoint find_tchimax(const StructureSpec& spec, double tol = 1e-6);

struct ShiftLawFit {
  double a = 0;  // t_star = a * k^(-b)
  double b = 0;
  double residual_norm = 0;
};

// Least squares of log t_star = log a - b log k; needs >= 3 points with
// distinct k.
ShiftLawFit fit_shift_law(const std::vector<std::pair<double, double>>& k_tstar);

// psi and the size-scaled critical exponents. gamma_nu is computed as
// 1 - 2 beta_nu, so the scaling relation holds exactly by construction.
// A prefactors exist for s1/s3 only (NaN otherwise).
struct ExponentPoint {
  double t = 0;
  int k = 0;
  double psi = 0;
  double beta_nu = 0;
  double gamma_nu = 0;
  double a_exact = 0;
  double a_approx = 0;
};

ExponentPoint exponents(const StructureSpec& spec, double t);

}  // namespace stabtherm
