#pragma once

#include <utility>

#include "stabtherm/pauli.hpp"
#include "stabtherm/thermo.hpp"

namespace stabtherm {

inline constexpr int kMaxEnumerationSpins = 20;

// Boltzmann averages over all 2^N configurations; exact by construction.
// Weights are shifted by the ground energy -(#terms) so low T never
// overflows. N <= 20.
ThermoPoint exact_thermo(const ZHamiltonian& ham, double t);
ThermoPoint exact_thermo_serial(const ZHamiltonian& ham, double t);

// Excitation gap entering the kinetic-barrier statements: the minimum energy
// cost of a single spin flip out of the aligned ground state, i.e.
// 2 * min_i #{terms containing i}. Needs no enumeration, so it is not
// limited to 20 spins. Note this is not the full-spectrum E1 - E0: the
// canonical Hamiltonian has collective (block-flip) excitations at cost 2
// for every k, while the single-flip gap grows as 2k.
double energy_gap(const ZHamiltonian& ham);

// Two lowest distinct energy levels over the full spectrum (N <= 20).
std::pair<double, double> lowest_levels(const ZHamiltonian& ham);

}  // namespace stabtherm
