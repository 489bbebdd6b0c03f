#include "stabtherm/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "stabtherm/logspace.hpp"

namespace stabtherm {

Polarizations polarizations(double t) {
  if (!(t > 0)) throw std::domain_error("temperature must be positive");
  Polarizations p;
  p.t = t;
  const double b = 1.0 / t;
  const double q = std::exp(-2 * b);   // e^{-2/T}
  const double q2 = std::exp(-4 * b);  // e^{-4/T}

  p.epsilon = (1 - q) / (1 + q);
  p.one_minus_eps = 2 * q / (1 + q);
  p.log_one_minus_eps = std::log(2.0) - 2 * b - std::log1p(q);
  p.log_eps = p.one_minus_eps > 0 ? std::log1p(-p.one_minus_eps) : -0.0;
  // -log eps = ome + ome^2/2 + ...; switch to the leading term once the
  // direct route loses all precision
  p.log_neg_log_eps = p.one_minus_eps > 1e-270
                          ? std::log(-std::log1p(-p.one_minus_eps))
                          : p.log_one_minus_eps;

  p.alpha = (1 - q2) / (1 + 3 * q2);
  p.one_minus_alpha = 4 * q2 / (1 + 3 * q2);
  p.log_one_minus_alpha = std::log(4.0) - 4 * b - std::log1p(3 * q2);
  p.log_alpha = p.one_minus_alpha > 0 ? std::log1p(-p.one_minus_alpha) : -0.0;

  p.log_q1 = b + std::log1p(q);
  p.log_q2 = 3 * b + std::log1p(3 * q2);
  return p;
}

ThermoPoint LogThermoPoint::to_point() const {
  ThermoPoint out;
  out.t = t;
  out.m_rel = std::exp(log_m_rel);
  out.m2 = std::exp(log_m2);
  out.m0 = std::exp(log_m0);
  out.chi = log_chi == neg_inf() ? 0.0 : std::exp(log_chi);
  out.energy = energy_per_spin * std::exp(log_num_spins);
  return out;
}

namespace {

// log(1 + 2 eps) etc. computed through the distance from 3 so that k * log
// stays accurate at low temperature
double log_one_plus_two(double one_minus_pol) { return kLog3 + std::log1p(-2 * one_minus_pol / 3); }

struct Core {
  double log_m_rel = 0;
  double log_var = 0;  // log(<M^2> - <M~>^2) = log(N T chi)
};

// S1 family: psi = 1+2eps, variance 2(1-eps^2) 3^{k-1} G((psi^2)/3, k);
// S3 is the same with alpha and 1+a-2a^2 = (1-a)(1+2a).
Core tree_core(int k, double log_psi, double log_pair_factor) {
  Core c;
  c.log_m_rel = k * log_psi;
  if (k == 0) {
    c.log_var = neg_inf();
    return c;
  }
  const double log_r = 2 * log_psi - kLog3;
  c.log_var = std::log(2.0) + log_pair_factor + (k - 1) * kLog3 +
              log_geom_sum(log_r, static_cast<double>(k));
  return c;
}

// log(1 - eps^m) given log_eps and log(-log eps); exact branch when m*log eps
// is representable, leading series term otherwise
double log_one_minus_pow(double log_eps, double log_neg_log_eps, double m) {
  if (m <= 0) return neg_inf();
  const double y = m * log_eps;
  if (y < -1e-8) return log1m_exp(y);
  const double log_ms = std::log(m) + log_neg_log_eps;  // 1 - eps^m = ms(1 - ms/2 + ...)
  const double ms = std::exp(log_ms);
  return log_ms + std::log1p(-ms / 2);
}

LogThermoPoint canonical_log(int k, double t, const Polarizations& p) {
  LogThermoPoint out;
  out.t = t;
  out.log_num_spins = k * kLog3;
  const double log_2pe = kLog3 + std::log1p(-p.one_minus_eps / 3);  // log(2 + eps)
  const double log_zeta = log_2pe + p.log_eps;
  const double log_rho = log_zeta + 2 * p.log_eps;

  out.log_m_rel = log_sum_exp(
      0.0, std::log(2.0) + p.log_eps + log_geom_sum(log_rho, static_cast<double>(k)));

  // Variance as a positive sum over levels; the naive moment difference
  // cancels catastrophically at low T. With G_j = sum_{i<j} rho^i:
  //   V = sum_{j=1..k} 3^{k-j} * 2 * [ ((1-eps)(1 + eps poly G_{j-1}))^2
  //         + zeta^{2j-2} eps (2(1-eps^{4j-3}) + eps(1-eps^{4j-4})) ]
  // with poly = eps^3 + 3eps^2 + 3eps + 3 (from 3 - rho = (1-eps) poly).
  if (k == 0) {
    out.log_m2 = 0;
    out.log_chi = neg_inf();
    out.log_m0 = 0;
    out.energy_per_spin = 0;
    return out;
  }
  const double e = p.epsilon;
  const double log_poly = std::log(((e + 3) * e + 3) * e + 3);
  double log_G = neg_inf();
  double log_var = neg_inf();
  for (int j = 1; j <= k; ++j) {
    const double log_ab =
        p.log_one_minus_eps + log_sum_exp(0.0, p.log_eps + log_poly + log_G);
    const double log_bracket =
        log_sum_exp(std::log(2.0) + log_one_minus_pow(p.log_eps, p.log_neg_log_eps, 4.0 * j - 3),
                    p.log_eps + log_one_minus_pow(p.log_eps, p.log_neg_log_eps, 4.0 * j - 4));
    const double log_t2 = (2 * j - 2) * log_zeta + p.log_eps + log_bracket;
    const double term =
        std::log(2.0) + (k - j) * kLog3 + log_sum_exp(2 * log_ab, log_t2);
    log_var = log_sum_exp(log_var, term);
    log_G = log_sum_exp(log_G + log_rho, 0.0);
  }
  out.log_m2 = log_sum_exp(2 * out.log_m_rel, log_var);
  out.log_chi = log_var - k * kLog3 - std::log(t);
  out.log_m0 = out.log_m_rel - out.log_num_spins;
  out.energy_per_spin = -p.epsilon * (1 - std::exp(-k * kLog3));
  return out;
}

LogThermoPoint line_log(double n, double t, const Polarizations& p) {
  LogThermoPoint out;
  out.t = t;
  out.log_num_spins = std::log(n);
  out.log_m_rel = log_geom_sum(p.log_eps, n);
  if (n == 1) {
    out.log_m2 = 0;
    out.log_chi = neg_inf();
    out.log_m0 = 0;
    out.energy_per_spin = 0;
    return out;
  }
  // V u^2 = N u (1+x) - (1-w)(1+2x-w), w = x^N; the quadratic in w factors
  // so the constant terms never enter a subtraction. Below Ns ~ 1e-3 the
  // remaining cancellation is avoided by the series in s = -log x:
  //   V = s D1 - s^2 D2/2 + s^3 D3/6 + O((Ns)^4 / N),
  // D1 = N(N-1)(2N-1)/3, D2 = N^2(N-1)^2, D3 = N(N-1)(2N-1)(21N^2-21N-2)/30.
  // Worst-case relative error of the pair is ~4e-10 at the switch point.
  const double s = -p.log_eps;  // decay rate per step; may underflow to 0
  double log_var;
  if (!(n * s > 1.2e-3)) {
    const double d1 = n * (n - 1) * (2 * n - 1) / 3;
    const double r2 = 3 * n * (n - 1) / (2 * (2 * n - 1));
    const double r3 = (21 * n * n - 21 * n - 2) / 60;
    log_var = p.log_neg_log_eps + std::log(d1) + std::log1p(-s * r2 + s * s * r3);
  } else {
    const double x = p.epsilon;
    const double u = p.one_minus_eps;
    const double e1 = -std::expm1(n * p.log_eps);  // 1 - x^N
    const double v = (n * u * (1 + x) - e1 * (2 * x + e1)) / (u * u);
    log_var = std::log(v);
  }
  out.log_m2 = log_sum_exp(2 * out.log_m_rel, log_var);
  out.log_chi = log_var - out.log_num_spins - std::log(t);
  out.log_m0 = out.log_m_rel - out.log_num_spins;
  out.energy_per_spin = -p.epsilon * (n - 1) / n;
  return out;
}

LogThermoPoint star_log(double n, double t, const Polarizations& p) {
  LogThermoPoint out;
  out.t = t;
  out.log_num_spins = std::log(n);
  out.log_m_rel = log_sum_exp(0.0, std::log(n - 1) + p.log_eps);
  if (n == 1) {
    out.log_m2 = 0;
    out.log_chi = neg_inf();
    out.log_m0 = 0;
    out.energy_per_spin = 0;
    return out;
  }
  // <M^2> = N + 2(N-1) eps + (N-1)(N-2) eps^2; variance collapses to
  // (N-1)(1 - eps^2)
  const double log_var =
      std::log(n - 1) + p.log_one_minus_eps + std::log1p(p.epsilon);
  out.log_m2 = log_sum_exp(2 * out.log_m_rel, log_var);
  out.log_chi = log_var - out.log_num_spins - std::log(t);
  out.log_m0 = out.log_m_rel - out.log_num_spins;
  out.energy_per_spin = -p.epsilon * (n - 1) / n;
  return out;
}

}  // namespace

LogThermoPoint closed_form_log(const StructureSpec& spec, double t) {
  const Polarizations p = polarizations(t);
  const double log_pair_eps = p.log_one_minus_eps + std::log1p(p.epsilon);  // log(1-eps^2)
  const double log_psi1 = log_one_plus_two(p.one_minus_eps);
  const double log_psi3 = log_one_plus_two(p.one_minus_alpha);
  // 1 + a - 2a^2 = (1-a)(1+2a)
  const double log_pair_alpha = p.log_one_minus_alpha + log_psi3;

  switch (spec.kind) {
    case StructureKind::line:
      return line_log(static_cast<double>(spec.size), t, p);
    case StructureKind::star:
      return star_log(static_cast<double>(spec.size), t, p);
    case StructureKind::canonical:
      return canonical_log(spec.level, t, p);
    default:
      break;
  }

  const int k = spec.level;
  LogThermoPoint out;
  out.t = t;
  out.log_num_spins = k * kLog3;
  Core core;
  double e_per_spin = 0;
  const double three_mk = std::exp(-k * kLog3);  // 3^{-k}
  switch (spec.kind) {
    case StructureKind::s1:
      core = tree_core(k, log_psi1, log_pair_eps);
      e_per_spin = -p.epsilon * (1 - three_mk);
      break;
    case StructureKind::s3:
      core = tree_core(k, log_psi3, log_pair_alpha);
      e_per_spin = -1.5 * p.alpha * (1 - three_mk);
      break;
    case StructureKind::s2: {
      if (k == 0) {
        core = tree_core(0, log_psi1, log_pair_eps);
      } else {
        const Core inner = tree_core(k - 1, log_psi1, log_pair_eps);
        core.log_m_rel = log_psi3 + inner.log_m_rel;
        core.log_var = log_sum_exp(2 * log_psi3 + inner.log_var,
                                   std::log(2.0) + (k - 1) * kLog3 + log_pair_alpha);
        e_per_spin = -(p.epsilon * (1.0 / 3 - three_mk) + p.alpha);
      }
      break;
    }
    case StructureKind::s4: {
      if (k == 0) {
        core = tree_core(0, log_psi3, log_pair_alpha);
      } else {
        const Core inner = tree_core(k - 1, log_psi3, log_pair_alpha);
        core.log_m_rel = log_psi1 + inner.log_m_rel;
        core.log_var = log_sum_exp(2 * log_psi1 + inner.log_var,
                                   std::log(2.0) + (k - 1) * kLog3 + log_pair_eps);
        e_per_spin = -(p.epsilon * 2.0 / 3 + 1.5 * p.alpha * (1.0 / 3 - three_mk));
      }
      break;
    }
    default:
      throw std::logic_error("unhandled structure kind");
  }
  out.log_m_rel = core.log_m_rel;
  out.log_m2 = log_sum_exp(2 * core.log_m_rel, core.log_var);
  out.log_chi = core.log_var == neg_inf() ? neg_inf()
                                          : core.log_var - k * kLog3 - std::log(t);
  out.log_m0 = out.log_m_rel - out.log_num_spins;
  out.energy_per_spin = e_per_spin;
  return out;
}

ThermoPoint closed_form_point(const StructureSpec& spec, double t) {
  return closed_form_log(spec, t).to_point();
}

namespace {

double path_between(const SpinGraph& g, int a, int b, double eps, double alpha) {
  if (a == b) return 1.0;
  double val = 1.0;
  int top_a = -1, top_b = -1;  // last nodes below the meeting node on each branch
  while (g.depth[a] > g.depth[b]) {
    val *= g.pair_partner[a] >= 0 ? alpha : eps;
    top_a = a;
    a = g.parent[a];
  }
  while (g.depth[b] > g.depth[a]) {
    val *= g.pair_partner[b] >= 0 ? alpha : eps;
    top_b = b;
    b = g.parent[b];
  }
  while (a != b) {
    val *= g.pair_partner[a] >= 0 ? alpha : eps;
    val *= g.pair_partner[b] >= 0 ? alpha : eps;
    top_a = a;
    top_b = b;
    a = g.parent[a];
    b = g.parent[b];
  }
  // shortcut: a paired top pair contributes a single alpha jointly
  if (top_a >= 0 && top_b >= 0 && g.pair_partner[top_a] == top_b) val /= alpha;
  return val;
}

template <bool Parallel>
PathThermo path_thermo_impl(const SpinGraph& g, double t) {
  if (g.num_spins > static_cast<int>(kMaxGraphSpins))
    throw std::invalid_argument("graph exceeds the 3^7 path-evaluator cap");
  const Polarizations p = polarizations(t);
  const double eps = p.epsilon, alpha = p.alpha;
  const int n = g.num_spins;

  PathThermo out;
  for (int m = 0; m < n; ++m) out.m_rel += path_between(g, 0, m, eps, alpha);

  double m2 = 0;
#ifdef STABTHERM_HAVE_OPENMP
#pragma omp parallel for reduction(+ : m2) schedule(static) if (Parallel)
#endif
  for (int a = 0; a < n; ++a) {
    double row = 0;
    for (int b = 0; b < n; ++b) row += path_between(g, a, b, eps, alpha);
    m2 += row;
  }
  out.m2 = m2;
  return out;
}

}  // namespace

PathThermo path_thermo(const SpinGraph& graph, double t) {
  return path_thermo_impl<true>(graph, t);
}

double path_product(const SpinGraph& graph, int from, int to, double t) {
  if (from < 0 || from >= graph.num_spins || to < 0 || to >= graph.num_spins)
    throw std::out_of_range("node index out of range");
  const Polarizations p = polarizations(t);
  return path_between(graph, from, to, p.epsilon, p.alpha);
}

PathThermo path_thermo_serial(const SpinGraph& graph, double t) {
  return path_thermo_impl<false>(graph, t);
}

}  // namespace stabtherm
