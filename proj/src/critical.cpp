#include "stabtherm/critical.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "stabtherm/logspace.hpp"
#include "stabtherm/thermo.hpp"

namespace stabtherm {

CriticalPoint find_tchimax(const StructureSpec& spec, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const auto f = [&spec](double t) { return closed_form_log(spec, t).log_chi; };

  constexpr int kGridPoints = 200;
  const double lo = std::log(1e-3), hi = std::log(10.0);
  std::vector<double> ts(kGridPoints), vals(kGridPoints);
  for (int i = 0; i < kGridPoints; ++i) {
    ts[i] = std::exp(lo + (hi - lo) * i / (kGridPoints - 1));
    vals[i] = f(ts[i]);
  }
  int imax = 0;
  for (int i = 1; i < kGridPoints; ++i)
    if (vals[i] > vals[imax]) imax = i;

  if (vals[imax] == neg_inf() || vals[imax] - vals[0] < 1e-12 ||
      imax == 0 || imax == kGridPoints - 1)
    throw std::domain_error("chi has no interior maximum on the search bracket");

  bool unimodal = true;
  for (int i = 0; i + 1 < kGridPoints; ++i) {
    const bool rising = vals[i] <= vals[i + 1] + 1e-9;
    const bool falling = vals[i] >= vals[i + 1] - 1e-9;
    if (i < imax && !rising) unimodal = false;
    if (i >= imax && !falling) unimodal = false;
  }

  double a = ts[imax - 1], b = ts[imax + 1];
  const double gr = (std::sqrt(5.0) - 1) / 2;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }

  CriticalPoint out;
  out.spec = spec;
  out.t_star = (a + b) / 2;
  out.log_chi_star = f(out.t_star);
  out.chi_star = std::exp(out.log_chi_star);
  out.grid_unimodal = unimodal;
  return out;
}

ShiftLawFit fit_shift_law(const std::vector<std::pair<double, double>>& k_tstar) {
  if (k_tstar.size() < 3)
    throw std::invalid_argument("shift-law fit needs at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(k_tstar.size());
  for (const auto& [k, t] : k_tstar) {
    if (!(k > 0) || !(t > 0))
      throw std::invalid_argument("shift-law fit needs positive k and t_star");
    const double x = std::log(k), y = std::log(t);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = n * sxx - sx * sx;
  if (std::fabs(det) < 1e-12 * n * sxx)
    throw std::invalid_argument("shift-law fit is degenerate (all k equal)");
  const double slope = (n * sxy - sx * sy) / det;
  const double intercept = (sy - slope * sx) / n;
  ShiftLawFit fit;
  fit.a = std::exp(intercept);
  fit.b = -slope;
  double r2 = 0;
  for (const auto& [k, t] : k_tstar) {
    const double r = std::log(t) - (intercept + slope * std::log(k));
    r2 += r * r;
  }
  fit.residual_norm = std::sqrt(r2);
  return fit;
}

ExponentPoint exponents(const StructureSpec& spec, double t) {
  const int k = spec.level;
  if (spec.kind != StructureKind::s1 && spec.kind != StructureKind::s2 &&
      spec.kind != StructureKind::s3 && spec.kind != StructureKind::s4)
    throw std::invalid_argument("psi exponents are defined for s1..s4 only");
  if (k < 1) throw std::invalid_argument("exponents need level k >= 1");

  const Polarizations p = polarizations(t);
  const double log_psi1 = kLog3 + std::log1p(-2 * p.one_minus_eps / 3);
  const double log_psi3 = kLog3 + std::log1p(-2 * p.one_minus_alpha / 3);

  double log_psi = 0;
  switch (spec.kind) {
    case StructureKind::s1: log_psi = log_psi1; break;
    case StructureKind::s3: log_psi = log_psi3; break;
    case StructureKind::s2: log_psi = log_psi1 + (log_psi3 - log_psi1) / k; break;
    case StructureKind::s4: log_psi = log_psi3 + (log_psi1 - log_psi3) / k; break;
    default: break;
  }

  ExponentPoint out;
  out.t = t;
  out.k = k;
  out.psi = std::exp(log_psi);
  out.beta_nu = 1 - log_psi / kLog3;
  out.gamma_nu = 1 - 2 * out.beta_nu;

  if (spec.kind == StructureKind::s1 || spec.kind == StructureKind::s3) {
    // A_exact = 2 (pair factor) G(3/psi^2, k) / (T psi^2); the approximation
    // drops the finite-size factor and is singular where psi^2 = 3.
    const double log_pair = spec.kind == StructureKind::s1
                                ? p.log_one_minus_eps + std::log1p(p.epsilon)
                                : p.log_one_minus_alpha + log_psi3;
    const double pol = spec.kind == StructureKind::s1 ? p.epsilon : p.alpha;
    out.a_exact = std::exp(std::log(2.0) + log_pair +
                           log_geom_sum(kLog3 - 2 * log_psi, static_cast<double>(k)) -
                           std::log(t) - 2 * log_psi);
    out.a_approx = std::exp(log_pair) / (t * (2 * pol * pol + 2 * pol - 1));
  } else {
    out.a_exact = std::numeric_limits<double>::quiet_NaN();
    out.a_approx = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace stabtherm
