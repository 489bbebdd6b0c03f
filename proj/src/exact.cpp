#include "stabtherm/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace stabtherm {

namespace {

std::vector<std::uint32_t> term_masks(const ZHamiltonian& ham) {
  std::vector<std::uint32_t> masks;
  masks.reserve(ham.terms.size());
  for (const ZString& t : ham.terms) {
    std::uint32_t m = 0;
    for (int i : t.indices()) m |= std::uint32_t{1} << i;
    masks.push_back(m);
  }
  return masks;
}

void check_enumerable(const ZHamiltonian& ham) {
  if (ham.num_spins < 1) throw std::invalid_argument("Hamiltonian has no spins");
  if (ham.num_spins > kMaxEnumerationSpins)
    throw std::invalid_argument("exact enumeration is limited to 20 spins");
}

struct Accum {
  double z = 0, m_rel = 0, m2 = 0, e = 0;
  void add(const Accum& o) { z += o.z; m_rel += o.m_rel; m2 += o.m2; e += o.e; }
};

// E(cfg) = 2 * (#violated terms) - (#terms); the all-up state realises the
// -(#terms) floor, so weights exp(-(E - E_min)/T) never overflow.
Accum accumulate_range(const std::vector<std::uint32_t>& masks, int n, double t,
                       std::uint32_t begin, std::uint32_t end) {
  Accum a;
  const double beta = 1.0 / t;
  const int nterms = static_cast<int>(masks.size());
  for (std::uint32_t cfg = begin; cfg < end; ++cfg) {
    int violated = 0;
    for (std::uint32_t m : masks) violated += std::popcount(cfg & m) & 1u;
    const double energy = 2.0 * violated - nterms;
    const double w = std::exp(-beta * (energy + nterms));
    const int mag = n - 2 * std::popcount(cfg);
    const int s0 = 1 - 2 * static_cast<int>(cfg & 1u);
    a.z += w;
    a.m_rel += w * s0 * mag;
    a.m2 += w * static_cast<double>(mag) * mag;
    a.e += w * energy;
  }
  return a;
}

ThermoPoint finish(const Accum& a, int n, double t) {
  ThermoPoint out;
  out.t = t;
  out.m_rel = a.m_rel / a.z;
  out.m2 = a.m2 / a.z;
  out.m0 = out.m_rel / n;
  out.chi = (out.m2 - out.m_rel * out.m_rel) / (n * t);
  out.energy = a.e / a.z;
  return out;
}

}  // namespace

ThermoPoint exact_thermo(const ZHamiltonian& ham, double t) {
  check_enumerable(ham);
  if (!(t > 0)) throw std::domain_error("temperature must be positive");
  const auto masks = term_masks(ham);
  const int n = ham.num_spins;
  const std::uint64_t total = std::uint64_t{1} << n;

  // fixed chunking with an ordered combine keeps the result independent of
  // the thread count
  const int chunks = total >= 4096 ? 64 : 1;
  std::vector<Accum> parts(chunks);
#ifdef STABTHERM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int c = 0; c < chunks; ++c) {
    const std::uint32_t begin = static_cast<std::uint32_t>(total * c / chunks);
    const std::uint32_t end = static_cast<std::uint32_t>(total * (c + 1) / chunks);
    parts[c] = accumulate_range(masks, n, t, begin, end);
  }
  Accum a;
  for (const Accum& p : parts) a.add(p);
  return finish(a, n, t);
}

ThermoPoint exact_thermo_serial(const ZHamiltonian& ham, double t) {
  check_enumerable(ham);
  if (!(t > 0)) throw std::domain_error("temperature must be positive");
  const auto masks = term_masks(ham);
  const std::uint64_t total = std::uint64_t{1} << ham.num_spins;
  const Accum a =
      accumulate_range(masks, ham.num_spins, t, 0, static_cast<std::uint32_t>(total));
  return finish(a, ham.num_spins, t);
}

double energy_gap(const ZHamiltonian& ham) {
  if (ham.num_spins < 1) throw std::invalid_argument("Hamiltonian has no spins");
  std::vector<int> incidence(ham.num_spins, 0);
  for (const ZString& t : ham.terms)
    for (int i : t.indices()) ++incidence[i];
  return 2.0 * *std::min_element(incidence.begin(), incidence.end());
}

std::pair<double, double> lowest_levels(const ZHamiltonian& ham) {
  check_enumerable(ham);
  const auto masks = term_masks(ham);
  const int nterms = static_cast<int>(masks.size());
  const std::uint64_t total = std::uint64_t{1} << ham.num_spins;
  int best = nterms + 1, second = nterms + 1;  // violation counts
  for (std::uint64_t cfg = 0; cfg < total; ++cfg) {
    int violated = 0;
    for (std::uint32_t m : masks)
      violated += std::popcount(static_cast<std::uint32_t>(cfg) & m) & 1u;
    if (violated < best) {
      second = best;
      best = violated;
    } else if (violated > best && violated < second) {
      second = violated;
    }
  }
  if (second > nterms)
    throw std::domain_error("spectrum has a single level; no gap defined");
  return {2.0 * best - nterms, 2.0 * second - nterms};
}

}  // namespace stabtherm
