#include "stabtherm/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "stabtherm/rng.hpp"

namespace stabtherm {

namespace {

struct SampleSeries {
  std::vector<double> m_rel, m2, energy;
};

ThermoPoint reduce_samples(const SampleSeries& s, int n, double t, int batches) {
  const std::size_t count = s.m_rel.size();
  ThermoPoint out;
  out.t = t;
  double sm = 0, sm2 = 0, se = 0;
  for (std::size_t i = 0; i < count; ++i) {
    sm += s.m_rel[i];
    sm2 += s.m2[i];
    se += s.energy[i];
  }
  out.m_rel = sm / count;
  out.m2 = sm2 / count;
  out.m0 = out.m_rel / n;
  out.chi = (out.m2 - out.m_rel * out.m_rel) / (n * t);
  out.energy = se / count;

  // a batch needs >= 2 samples or the per-batch chi degenerates to zero
  int b = batches > 0 ? batches : 1;
  if (static_cast<std::size_t>(b) > count / 2) b = static_cast<int>(count / 2);
  if (b >= 2) {
    std::vector<double> bm(b, 0), bm2(b, 0), bn(b, 0);
    for (std::size_t i = 0; i < count; ++i) {
      const int j = static_cast<int>(i * b / count);
      bm[j] += s.m_rel[i];
      bm2[j] += s.m2[i];
      bn[j] += 1;
    }
    double var_m = 0, var_chi = 0;
    std::vector<double> chib(b);
    for (int j = 0; j < b; ++j) {
      bm[j] /= bn[j];
      bm2[j] /= bn[j];
      chib[j] = (bm2[j] - bm[j] * bm[j]) / (n * t);
    }
    for (int j = 0; j < b; ++j) {
      var_m += (bm[j] - out.m_rel) * (bm[j] - out.m_rel);
      var_chi += (chib[j] - out.chi) * (chib[j] - out.chi);
    }
    out.se_m_rel = std::sqrt(var_m / (b - 1) / b);
    out.se_chi = std::sqrt(var_chi / (b - 1) / b);
  }
  return out;
}

void check_mc_args(double t, const McConfig& cfg) {
  if (!(t > 0)) throw std::domain_error("temperature must be positive");
  if (cfg.n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
}

}  // namespace

ThermoPoint run_wolff(const SpinGraph& graph, double t, const McConfig& cfg) {
  check_mc_args(t, cfg);
  const int n = graph.num_spins;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [p, c] : graph.tree_edges) {
    adj[p].push_back(c);
    adj[c].push_back(p);
  }
  for (const auto& [u, v] : graph.sibling_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  RngStream rng(cfg.seed, cfg.stream);
  const double p_add = -std::expm1(-2.0 / t);
  std::vector<int8_t> spin(n, 1);
  std::vector<int8_t> in_cluster(n, 0);
  std::vector<int> stack, cluster;

  auto cluster_update = [&] {
    const int seed_site = rng.uniform_index(n);
    stack.assign(1, seed_site);
    cluster.assign(1, seed_site);
    in_cluster[seed_site] = 1;
    while (!stack.empty()) {
      const int site = stack.back();
      stack.pop_back();
      for (int nb : adj[site]) {
        if (in_cluster[nb] || spin[nb] != spin[site]) continue;
        if (rng.uniform() < p_add) {
          in_cluster[nb] = 1;
          stack.push_back(nb);
          cluster.push_back(nb);
        }
      }
    }
    for (int site : cluster) {
      spin[site] = -spin[site];
      in_cluster[site] = 0;
    }
  };

  for (std::uint64_t i = 0; i < cfg.equilibration; ++i) cluster_update();

  SampleSeries series;
  series.m_rel.reserve(cfg.n_samples);
  series.m2.reserve(cfg.n_samples);
  series.energy.reserve(cfg.n_samples);
  const std::uint64_t stride = cfg.decorrelation > 0 ? cfg.decorrelation : 1;
  for (std::uint64_t i = 0; i < cfg.n_samples; ++i) {
    for (std::uint64_t u = 0; u < stride; ++u) cluster_update();
    double mag = 0;
    for (int j = 0; j < n; ++j) mag += spin[j];
    double e = 0;
    for (const auto& [p, c] : graph.tree_edges) e -= spin[p] * spin[c];
    for (const auto& [u, v] : graph.sibling_edges) e -= spin[u] * spin[v];
    series.m_rel.push_back(spin[0] * mag);
    series.m2.push_back(mag * mag);
    series.energy.push_back(e);
  }
  return reduce_samples(series, n, t, cfg.batches);
}

ThermoPoint run_wolff(const ZHamiltonian& ham, double t, const McConfig& cfg) {
  SpinGraph g;
  g.num_spins = ham.num_spins;
  g.parent.assign(ham.num_spins, 0);
  g.depth.assign(ham.num_spins, 0);
  g.pair_partner.assign(ham.num_spins, -1);
  for (const ZString& term : ham.terms) {
    const auto idx = term.indices();
    if (idx.size() != 2)
      throw std::invalid_argument(
          "Wolff clusters need a two-body Hamiltonian; use run_metropolis for "
          "multi-body terms");
    g.tree_edges.emplace_back(idx[0], idx[1]);
  }
  return run_wolff(g, t, cfg);
}

ThermoPoint run_metropolis(const ZHamiltonian& ham, double t, const McConfig& cfg) {
  check_mc_args(t, cfg);
  const int n = ham.num_spins;
  if (n < 1) throw std::invalid_argument("Hamiltonian has no spins");
  const int nterms = static_cast<int>(ham.terms.size());
  std::vector<std::vector<int>> incidence(n);
  for (int ti = 0; ti < nterms; ++ti)
    for (int i : ham.terms[ti].indices()) incidence[i].push_back(ti);

  RngStream rng(cfg.seed, cfg.stream);
  std::vector<int8_t> spin(n, 1);
  std::vector<int8_t> prod(nterms, 1);
  double energy = -nterms;

  auto sweep = [&] {
    for (int site = 0; site < n; ++site) {
      int sum = 0;
      for (int ti : incidence[site]) sum += prod[ti];
      const double de = 2.0 * sum;
      if (rng.uniform() < std::exp(-de / t)) {
        spin[site] = -spin[site];
        for (int ti : incidence[site]) prod[ti] = -prod[ti];
        energy += de;
      }
    }
  };

  for (std::uint64_t i = 0; i < cfg.equilibration; ++i) sweep();

  SampleSeries series;
  series.m_rel.reserve(cfg.n_samples);
  series.m2.reserve(cfg.n_samples);
  series.energy.reserve(cfg.n_samples);
  const std::uint64_t stride = cfg.decorrelation > 0 ? cfg.decorrelation : 1;
  for (std::uint64_t i = 0; i < cfg.n_samples; ++i) {
    for (std::uint64_t u = 0; u < stride; ++u) sweep();
    double mag = 0;
    for (int j = 0; j < n; ++j) mag += spin[j];
    series.m_rel.push_back(spin[0] * mag);
    series.m2.push_back(mag * mag);
    series.energy.push_back(energy);
  }
  return reduce_samples(series, n, t, cfg.batches);
}

}  // namespace stabtherm
