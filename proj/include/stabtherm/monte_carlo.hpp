#pragma once

#include <cstdint>

#include "stabtherm/pauli.hpp"
#include "stabtherm/thermo.hpp"

namespace stabtherm {

// Sampling protocol. The seed fully determines the output; parallel chains
// must use distinct streams.
struct McConfig {
  std::uint64_t n_samples = 50000;
  std::uint64_t equilibration = 1000;  // cluster updates (Wolff) / sweeps (Metropolis)
  std::uint64_t decorrelation = 1;     // updates or sweeps between records
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;  // chain id mixed into the seed
  int batches = 50;          // batch-means blocks for the standard errors
};

// Wolff cluster updates over all graph edges (tree + sibling) with bond
// probability 1 - exp(-2/T) between aligned neighbours. Returns sample-mean
// estimators with batch-means standard errors on <M~> and chi.
ThermoPoint run_wolff(const SpinGraph& graph, double t, const McConfig& cfg);

// Convenience entry for a two-body Hamiltonian; rejects multi-body terms
// with a pointer to run_metropolis.
ThermoPoint run_wolff(const ZHamiltonian& ham, double t, const McConfig& cfg);

// Sequential single-flip Metropolis (acceptance min(1, exp(-dE/T))) for any
// Z-Hamiltonian, including the many-body canonical one. A sweep proposes one
// flip per spin.
ThermoPoint run_metropolis(const ZHamiltonian& ham, double t, const McConfig& cfg);

}  // namespace stabtherm
