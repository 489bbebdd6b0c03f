#include "stabtherm/verify.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "stabtherm/exact.hpp"
#include "stabtherm/pauli.hpp"
#include "stabtherm/structures.hpp"
#include "stabtherm/thermo.hpp"

namespace stabtherm {

namespace {

double rel_err(double got, double want) {
  const double scale = std::max(std::fabs(want), 1e-300);
  return std::fabs(got - want) / scale;
}

double point_rel_err(const ThermoPoint& got, const ThermoPoint& want) {
  double worst = 0;
  worst = std::max(worst, rel_err(got.m_rel, want.m_rel));
  worst = std::max(worst, rel_err(got.m2, want.m2));
  worst = std::max(worst, rel_err(got.chi, want.chi));
  worst = std::max(worst, rel_err(got.energy, want.energy));
  return worst;
}

}  // namespace

std::vector<CheckResult> verify_oracle_vs_closed() {
  std::vector<CheckResult> results;
  const double temperatures[] = {0.4, 0.8, 1.0, 1.5, 2.5, 5.0};
  const double tol = 1e-9;

  std::vector<StructureSpec> specs;
  for (auto kind : {StructureKind::s1, StructureKind::s2, StructureKind::s3,
                    StructureKind::s4, StructureKind::canonical})
    for (int k : {1, 2}) specs.push_back(StructureSpec::leveled(kind, k));
  for (auto kind : {StructureKind::line, StructureKind::star})
    for (std::uint64_t n : {3, 9}) specs.push_back(StructureSpec::sized(kind, n));

  for (const StructureSpec& spec : specs) {
    const ZHamiltonian ham = spec.kind == StructureKind::canonical
                                 ? build_canonical_hamiltonian(spec.level)
                                 : build_graph_hamiltonian(build_structure(spec));
    double worst = 0;
    for (double t : temperatures)
      worst = std::max(worst, point_rel_err(closed_form_point(spec, t), exact_thermo(ham, t)));
    std::ostringstream name, detail;
    name << "oracle vs closed form: " << spec.describe();
    detail << "max rel err " << worst << " over 6 temperatures (tol 1e-9)";
    results.push_back({name.str(), worst <= tol, detail.str()});
  }
  return results;
}

std::vector<CheckResult> verify_transforms() {
  std::vector<CheckResult> results;

  for (auto kind : {StructureKind::s1, StructureKind::s2, StructureKind::s3, StructureKind::s4}) {
    bool ok = true;
    std::string why = "singletons + sibling pairs, root unsupported";
    for (int k = 1; k <= 6 && ok; ++k) {
      const SpinGraph g = build_structure(StructureSpec::leveled(kind, k));
      const ZHamiltonian transformed =
          transform_hamiltonian(build_graph_hamiltonian(g), tree_disentangler(g));
      int singles = 0;
      std::set<int> single_support;
      std::set<std::pair<int, int>> pair_support;
      for (const ZString& term : transformed.terms) {
        if (term.test(0)) ok = false;
        const auto idx = term.indices();
        if (idx.size() == 1) {
          ++singles;
          single_support.insert(idx[0]);
        } else if (idx.size() == 2) {
          pair_support.insert({idx[0], idx[1]});
        } else {
          ok = false;
        }
      }
      std::set<std::pair<int, int>> expected_pairs(g.sibling_edges.begin(),
                                                   g.sibling_edges.end());
      if (singles != g.num_spins - 1 ||
          single_support.size() != static_cast<std::size_t>(g.num_spins - 1) ||
          pair_support != expected_pairs) {
        ok = false;
        why = "structure mismatch at k=" + std::to_string(k);
      }
    }
    results.push_back({std::string("tree disentangler: ") + kind_name(kind) +
                           " k<=6",
                       ok, why});
  }

  {
    bool ok = true;
    std::string why = "3^k-1 distinct singletons; logical maps to root";
    for (int k = 1; k <= 4 && ok; ++k) {
      const ZHamiltonian ham = build_canonical_hamiltonian(k);
      const Circuit circ = canonical_disentangler(k);
      std::set<int> supports;
      for (const ZString& term : ham.terms) {
        const ZString out = transform_operator(term, circ);
        if (out.weight() != 1) {
          ok = false;
          break;
        }
        supports.insert(out.indices()[0]);
      }
      if (static_cast<int>(supports.size()) != ham.num_spins - 1 || supports.count(0))
        ok = false;
      ZString all(ham.num_spins);
      for (int i = 0; i < ham.num_spins; ++i) all.set(i);
      const auto root = transform_operator(all, circ).indices();
      if (root != std::vector<int>{0}) ok = false;
      if (!ok) why = "mapping failed at k=" + std::to_string(k);
    }
    results.push_back({"canonical disentangler: k<=4", ok, why});
  }

  {
    bool ok = true;
    std::string why = "formula = symbolic support count, all pairs";
    for (int k = 1; k <= 3 && ok; ++k) {
      const Circuit circ = canonical_disentangler(k);
      const int n = static_cast<int>(std::lround(std::pow(3.0, k)));
      for (int a = 0; a < n && ok; ++a) {
        const TritLabel mu = TritLabel::from_index(k, a);
        for (int b = a + 1; b < n; ++b) {
          const TritLabel nu = TritLabel::from_index(k, b);
          ZString prod(n);
          prod.set(a);
          prod.toggle(b);
          const int symbolic = transform_operator(prod, circ).weight();
          if (symbolic != effective_distance(mu, nu, k)) {
            ok = false;
            why = "mismatch at k=" + std::to_string(k);
            break;
          }
          if (a == 0 && symbolic != root_effective_distance(nu, k)) {
            ok = false;
            why = "root specialization mismatch at k=" + std::to_string(k);
            break;
          }
        }
      }
    }
    results.push_back({"effective distances: k<=3 (all pairs)", ok, why});
  }

  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace stabtherm
