// Command-line front end: reproducible CSV-emitting experiments over the
// stabilizer structures (closed-form curves, susceptibility-peak scans,
// Monte Carlo comparisons, circuit dumps, verification).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef STABTHERM_HAVE_OPENMP
#include <omp.h>
#endif

#include "stabtherm/critical.hpp"
#include "stabtherm/exact.hpp"
#include "stabtherm/io.hpp"
#include "stabtherm/monte_carlo.hpp"
#include "stabtherm/pauli.hpp"
#include "stabtherm/structures.hpp"
#include "stabtherm/thermo.hpp"
#include "stabtherm/verify.hpp"

namespace {

using namespace stabtherm;

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
    os << content;
  }
};

std::vector<double> temperature_grid(double tmin, double tmax, int points, bool log_spacing) {
  if (!(tmin > 0) || !(tmax >= tmin)) throw CLI::ValidationError("need 0 < tmin <= tmax");
  if (points < 1) throw CLI::ValidationError("need at least one temperature point");
  std::vector<double> ts(points);
  if (points == 1) {
    ts[0] = tmin;
    return ts;
  }
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    ts[i] = log_spacing ? std::exp(std::log(tmin) + f * (std::log(tmax) - std::log(tmin)))
                        : tmin + f * (tmax - tmin);
  }
  return ts;
}

StructureSpec make_spec(const std::string& kind_name_str, std::optional<int> k,
                        std::optional<std::uint64_t> n) {
  const StructureKind kind = kind_from_name(kind_name_str);
  if (kind_is_leveled(kind)) {
    if (!k) throw CLI::ValidationError("--k is required for " + kind_name_str);
    return StructureSpec::leveled(kind, *k);
  }
  if (!n) throw CLI::ValidationError("--n is required for " + kind_name_str);
  return StructureSpec::sized(kind, *n);
}

std::string spec_param(const StructureSpec& spec) {
  return kind_is_leveled(spec.kind) ? std::to_string(spec.level) : std::to_string(spec.size);
}

int run_curve(const StructureSpec& spec, double tmin, double tmax, int points,
              bool log_spacing, const OutputTarget& out) {
  const auto ts = temperature_grid(tmin, tmax, points, log_spacing);
  std::vector<ThermoPoint> rows(ts.size());
#ifdef STABTHERM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < static_cast<int>(ts.size()); ++i)
    rows[i] = closed_form_point(spec, ts[i]);

  RunManifest manifest{"curve",
                       {{"structure", kind_name(spec.kind)},
                        {"param", spec_param(spec)},
                        {"tmin", fmt_double(tmin)},
                        {"tmax", fmt_double(tmax)},
                        {"points", std::to_string(points)},
                        {"spacing", log_spacing ? "log" : "linear"}}};
  std::string body = manifest.render();
  body += "T,m_rel,m2,m0,chi,energy\n";
  for (const ThermoPoint& r : rows)
    body += csv_row({r.t, r.m_rel, r.m2, r.m0, r.chi, r.energy});
  out.write(body);
  return 0;
}

int run_tchimax(const std::string& kind_str, const std::vector<std::uint64_t>& params,
                double tol, bool fit, const OutputTarget& out) {
  const StructureKind kind = kind_from_name(kind_str);
  std::vector<CriticalPoint> points;
  points.reserve(params.size());
  for (std::uint64_t p : params) {
    const StructureSpec spec = kind_is_leveled(kind)
                                   ? StructureSpec::leveled(kind, static_cast<int>(p))
                                   : StructureSpec::sized(kind, p);
    points.push_back(find_tchimax(spec, tol));
  }

  std::ostringstream plist;
  for (std::size_t i = 0; i < params.size(); ++i) plist << (i ? "," : "") << params[i];
  RunManifest manifest{"tchimax",
                       {{"structure", kind_str},
                        {"params", plist.str()},
                        {"tol", fmt_double(tol)}}};
  std::string body = manifest.render();
  body += "structure,k,t_star,log10_chi_star,grid_unimodal\n";
  for (const CriticalPoint& cp : points) {
    body += std::string(kind_name(cp.spec.kind)) + "," + spec_param(cp.spec) + "," +
            fmt_double(cp.t_star) + "," + fmt_double(cp.log_chi_star / std::log(10.0)) +
            "," + (cp.grid_unimodal ? "1" : "0") + "\n";
  }
  if (fit) {
    std::vector<std::pair<double, double>> samples;
    for (const CriticalPoint& cp : points)
      samples.emplace_back(kind_is_leveled(kind) ? cp.spec.level
                                                 : static_cast<double>(cp.spec.size),
                           cp.t_star);
    const ShiftLawFit f = fit_shift_law(samples);
    body += "# shift_law_fit: a=" + fmt_double(f.a) + " b=" + fmt_double(f.b) +
            " residual=" + fmt_double(f.residual_norm) + "\n";
  }
  out.write(body);
  return 0;
}

int run_mc(const StructureSpec& spec, const std::vector<double>& temps, McConfig cfg,
           const std::string& sampler, const OutputTarget& out) {
  const bool metropolis =
      sampler == "metropolis" || (sampler == "auto" && spec.kind == StructureKind::canonical);

  std::vector<ThermoPoint> rows(temps.size());
  std::vector<double> chi_analytic(temps.size());
  ZHamiltonian ham;
  SpinGraph graph;
  if (metropolis)
    ham = spec.kind == StructureKind::canonical
              ? build_canonical_hamiltonian(spec.level)
              : build_graph_hamiltonian(build_structure(spec));
  else
    graph = build_structure(spec);

#ifdef STABTHERM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < static_cast<int>(temps.size()); ++i) {
    McConfig chain = cfg;
    chain.stream = static_cast<std::uint64_t>(i);
    rows[i] = metropolis ? run_metropolis(ham, temps[i], chain)
                         : run_wolff(graph, temps[i], chain);
    chi_analytic[i] = closed_form_point(spec, temps[i]).chi;
  }

  std::ostringstream tlist;
  for (std::size_t i = 0; i < temps.size(); ++i) tlist << (i ? "," : "") << fmt_double(temps[i]);
  RunManifest manifest{"mc",
                       {{"structure", kind_name(spec.kind)},
                        {"param", spec_param(spec)},
                        {"temps", tlist.str()},
                        {"samples", std::to_string(cfg.n_samples)},
                        {"equilibration", std::to_string(cfg.equilibration)},
                        {"decorrelation", std::to_string(cfg.decorrelation)},
                        {"seed", std::to_string(cfg.seed)},
                        {"sampler", metropolis ? "metropolis" : "wolff"}}};
  std::string body = manifest.render();
  body += "T,m_rel,m2,m0,chi,energy,se_m_rel,se_chi,chi_analytic\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ThermoPoint& r = rows[i];
    body += csv_row({r.t, r.m_rel, r.m2, r.m0, r.chi, r.energy, r.se_m_rel.value_or(0),
                     r.se_chi.value_or(0), chi_analytic[i]});
  }
  out.write(body);
  return 0;
}

int run_transform(const StructureSpec& spec, bool with_graph, const OutputTarget& out) {
  RunManifest manifest{"transform",
                       {{"structure", kind_name(spec.kind)}, {"param", spec_param(spec)}}};
  std::string body = manifest.render();

  Circuit circ;
  ZHamiltonian ham;
  if (spec.kind == StructureKind::canonical) {
    ham = build_canonical_hamiltonian(spec.level);
    circ = canonical_disentangler(spec.level);
  } else {
    const SpinGraph g = build_structure(spec);
    if (with_graph) body += "# graph\n" + to_edge_list(g);
    ham = build_graph_hamiltonian(g);
    circ = tree_disentangler(g);
  }
  body += "# circuit\n" + to_gate_list(circ);
  body += "# transformed hamiltonian\n" + to_term_list(transform_hamiltonian(ham, circ));
  out.write(body);
  return 0;
}

int run_exponents(const StructureSpec& spec, double tmin, double tmax, int points,
                  bool log_spacing, const OutputTarget& out) {
  const auto ts = temperature_grid(tmin, tmax, points, log_spacing);
  RunManifest manifest{"exponents",
                       {{"structure", kind_name(spec.kind)},
                        {"param", spec_param(spec)},
                        {"tmin", fmt_double(tmin)},
                        {"tmax", fmt_double(tmax)},
                        {"points", std::to_string(points)}}};
  std::string body = manifest.render();
  body += "T,k,psi,beta_nu,gamma_nu,A_exact,A_approx\n";
  for (double t : ts) {
    const ExponentPoint e = exponents(spec, t);
    body += csv_row({e.t, static_cast<double>(e.k), e.psi, e.beta_nu, e.gamma_nu,
                     e.a_exact, e.a_approx});
  }
  out.write(body);
  return 0;
}

int run_gap(const StructureSpec& spec, const OutputTarget& out) {
  const ZHamiltonian ham = spec.kind == StructureKind::canonical
                               ? build_canonical_hamiltonian(spec.level)
                               : build_graph_hamiltonian(build_structure(spec));
  RunManifest manifest{"gap",
                       {{"structure", kind_name(spec.kind)}, {"param", spec_param(spec)}}};
  std::string body = manifest.render();
  body += "structure,k,gap\n";
  body += std::string(kind_name(spec.kind)) + "," + spec_param(spec) + "," +
          fmt_double(energy_gap(ham)) + "\n";
  out.write(body);
  return 0;
}

int run_verify(const OutputTarget& out) {
  std::vector<CheckResult> results = verify_oracle_vs_closed();
  const auto transforms = verify_transforms();
  results.insert(results.end(), transforms.begin(), transforms.end());

  std::string body;
  for (const CheckResult& r : results)
    body += std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.name + " — " + r.detail + "\n";
  const bool ok = all_passed(results);
  body += ok ? "all checks passed\n" : "CHECKS FAILED\n";
  out.write(body);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analytical and stochastic thermodynamics of memory stabilizer structures"};
  app.require_subcommand(1);

  OutputTarget out;
  int threads = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out.path, "write output to a file instead of stdout");
    cmd->add_option("--threads", threads,
                    "worker thread count (default: OMP_NUM_THREADS or all cores)");
  };

  std::string structure;
  std::optional<int> level;
  std::optional<std::uint64_t> size;
  auto add_spec_options = [&](CLI::App* cmd, bool sized_allowed = true) {
    cmd->add_option("--structure", structure, "s1|s2|s3|s4|canonical|line|star")->required();
    cmd->add_option("--k", level, "concatenation level (s1..s4, canonical)");
    if (sized_allowed) cmd->add_option("--n", size, "explicit size (line, star)");
  };

  double tmin = 0.1, tmax = 5.0, tol = 1e-6;
  int points = 100;
  bool log_spacing = false, with_fit = false, with_graph = false;
  std::vector<std::uint64_t> scan_params;
  std::vector<double> temps;
  McConfig mc_cfg;
  std::string sampler = "auto";

  CLI::App* curve = app.add_subcommand("curve", "closed-form thermodynamic curve (CSV)");
  add_common(curve);
  add_spec_options(curve);
  curve->add_option("--tmin", tmin)->required();
  curve->add_option("--tmax", tmax)->required();
  curve->add_option("--points", points, "number of temperature points")->default_val(100);
  curve->add_flag("--log-spacing", log_spacing, "logarithmic temperature spacing");

  CLI::App* tchimax = app.add_subcommand("tchimax", "susceptibility-peak temperatures (CSV)");
  add_common(tchimax);
  tchimax->add_option("--structure", structure, "s1|s2|s3|s4|canonical|line|star")->required();
  tchimax->add_option("--ks", scan_params, "levels to scan (s1..s4, canonical)")
      ->delimiter(',');
  tchimax->add_option("--sizes", scan_params, "sizes to scan (line, star)")
      ->delimiter(',');
  tchimax->add_option("--tol", tol, "temperature tolerance")->default_val(1e-6);
  tchimax->add_flag("--fit", with_fit, "append a t* = a k^-b least-squares fit");

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimates vs analytic values (CSV)");
  add_common(mc);
  add_spec_options(mc);
  mc->add_option("--temps", temps, "temperature list")->required()->delimiter(',');
  mc->add_option("--samples", mc_cfg.n_samples)->default_val(50000);
  mc->add_option("--equilibration", mc_cfg.equilibration)->default_val(1000);
  mc->add_option("--decorrelation", mc_cfg.decorrelation)->default_val(1);
  mc->add_option("--seed", mc_cfg.seed)->default_val(1);
  mc->add_option("--sampler", sampler, "auto|wolff|metropolis")->default_val("auto");

  CLI::App* transform = app.add_subcommand("transform", "circuit + transformed Hamiltonian dump");
  add_common(transform);
  add_spec_options(transform);
  transform->add_flag("--graph", with_graph, "include the edge list");

  CLI::App* expo = app.add_subcommand("exponents", "psi / beta_nu / gamma_nu / A sweep (CSV)");
  add_common(expo);
  add_spec_options(expo, false);
  expo->add_option("--tmin", tmin)->required();
  expo->add_option("--tmax", tmax)->required();
  expo->add_option("--points", points)->default_val(100);
  expo->add_flag("--log-spacing", log_spacing);

  CLI::App* gap = app.add_subcommand("gap", "single-flip excitation gap");
  add_common(gap);
  add_spec_options(gap);

  CLI::App* verify = app.add_subcommand("verify", "run the oracle and transform suites");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

#ifdef STABTHERM_HAVE_OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (curve->parsed())
      return run_curve(make_spec(structure, level, size), tmin, tmax, points, log_spacing, out);
    if (tchimax->parsed()) {
      if (scan_params.empty())
        throw CLI::ValidationError("tchimax needs --ks or --sizes");
      return run_tchimax(structure, scan_params, tol, with_fit, out);
    }
    if (mc->parsed())
      return run_mc(make_spec(structure, level, size), temps, mc_cfg, sampler, out);
    if (transform->parsed())
      return run_transform(make_spec(structure, level, size), with_graph, out);
    if (expo->parsed())
      return run_exponents(make_spec(structure, level, size), tmin, tmax, points,
                           log_spacing, out);
    if (gap->parsed()) return run_gap(make_spec(structure, level, size), out);
    if (verify->parsed()) return run_verify(out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
