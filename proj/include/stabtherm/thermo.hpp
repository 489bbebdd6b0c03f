#pragma once

#include <optional>

#include "stabtherm/structures.hpp"

namespace stabtherm {

// Thermal polarizations in the free-spin basis, J = k_B = 1.
//   epsilon = tanh(1/T)                         (spin in a field)
//   alpha   = (e^{3/T} - e^{-1/T}) / (e^{3/T} + 3 e^{-1/T})   (sibling pair)
// The one-minus and log companions stay accurate at low T where the linear
// values round to 1.
struct Polarizations {
  double t = 0;
  double epsilon = 0, alpha = 0;
  double one_minus_eps = 0, one_minus_alpha = 0;
  double log_eps = 0, log_alpha = 0;
  double log_one_minus_eps = 0, log_one_minus_alpha = 0;
  double log_neg_log_eps = 0;  // log(-log eps); usable below the underflow of -log eps
  double log_q1 = 0, log_q2 = 0;
};

Polarizations polarizations(double t);  // rejects t <= 0

struct ThermoPoint {
  double t = 0;
  double m_rel = 0;  // <M~> = sum_j <s0 s_j>
  double m2 = 0;     // <M^2>
  double m0 = 0;     // <M~>/N
  double chi = 0;    // (<M^2> - <M~>^2) / (N T)
  double energy = 0;
  std::optional<double> se_m_rel;  // estimators only
  std::optional<double> se_chi;
};

// Log-domain companion of ThermoPoint. m_rel, m2 and chi outgrow the double
// range around k ~ 650, so the logs are the authoritative representation for
// large systems; ThermoPoint saturates to inf past that.
struct LogThermoPoint {
  double t = 0;
  double log_num_spins = 0;
  double log_m_rel = 0;
  double log_m2 = 0;
  double log_m0 = 0;
  double log_chi = 0;         // -inf for a single free spin
  double energy_per_spin = 0;

  ThermoPoint to_point() const;
};

// Closed-form thermodynamics for any structure family; stable for k up to
// 10^4 and line sizes beyond 3^40.
LogThermoPoint closed_form_log(const StructureSpec& spec, double t);
ThermoPoint closed_form_point(const StructureSpec& spec, double t);

// Generic O(N^2) path evaluator for built graphs: edges inside a triangle
// carry alpha, all others epsilon; <M~> sums root paths, <M^2> sums all pairs
// with the sibling shortcut counting a paired top jointly as one alpha.
struct PathThermo {
  double m_rel = 0;
  double m2 = 0;
};

PathThermo path_thermo(const SpinGraph& graph, double t);
PathThermo path_thermo_serial(const SpinGraph& graph, double t);

// Product of edge labels along the shortest path between two nodes.
double path_product(const SpinGraph& graph, int from, int to, double t);

}  // namespace stabtherm
