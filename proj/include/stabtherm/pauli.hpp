#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabtherm/structures.hpp"

namespace stabtherm {

// A product of Pauli-Z operators, stored as its support set. CNOT
// conjugation keeps Z-strings inside Z-strings with no phase, so the support
// is the whole state.
class ZString {
 public:
  ZString() = default;
  explicit ZString(int num_spins);
  static ZString from_indices(int num_spins, const std::vector<int>& idx);

  int num_spins() const { return n_; }
  int weight() const;
  bool empty() const { return weight() == 0; }
  bool test(int spin) const;
  void set(int spin);
  void toggle(int spin);
  void multiply(const ZString& other);  // symmetric difference of supports
  std::vector<int> indices() const;

  bool operator==(const ZString& other) const { return n_ == other.n_ && words_ == other.words_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// CNOT(c,t) Z-conjugation: toggles c's membership iff t is in the support.
// Involutive. c == t is rejected.
ZString conjugate_cnot(ZString zs, int control, int target);

struct ZHamiltonian {
  int num_spins = 0;
  std::vector<ZString> terms;  // each carries coupling -J, J = 1
};

struct Gate {
  int control = 0;
  int target = 0;
};

struct Circuit {
  std::vector<Gate> gates;  // conjugation is applied front to back
};

// One two-spin Z-string per tree edge and per sibling edge.
ZHamiltonian build_graph_hamiltonian(const SpinGraph& graph);

// CNOTs from the leaves inward (control on the parent side). Conjugating the
// graph Hamiltonian yields N-1 singletons with the root unsupported, plus one
// two-spin term per sibling pair.
Circuit tree_disentangler(const SpinGraph& graph);

ZString transform_operator(ZString op, const Circuit& circuit);
ZHamiltonian transform_hamiltonian(const ZHamiltonian& ham, const Circuit& circuit);

// "CNOT <control> <target>" per line / sorted indices per term line.
std::string to_gate_list(const Circuit& circuit);
std::string to_term_list(const ZHamiltonian& ham);

// ---- canonical stabilizer ----
//
// Physical spins carry (k+1)-trit labels mu_k ... mu_0 with mu_k = 0; the
// linear index is the base-3 value of the trailing k trits. Parity checks
// A^j_{eta x} compare adjacent 3^(j-1)-spin blocks.

struct TritLabel {
  std::string trits;  // e.g. "012": mu_2='0', mu_1='1', mu_0='2'

  int level() const { return static_cast<int>(trits.size()) - 1; }
  static TritLabel from_index(int k, std::uint32_t index);
  std::uint32_t index() const;
};

void validate_label(const TritLabel& mu, int k);

// A^level with subscript trits eta followed by x; x == 0 is the composite
// A_{eta 0} = A_{eta 1} A_{eta 2}.
struct StabilizerElement {
  int level = 1;
  std::string subscript;  // length k - level + 2, leading trit '0'
};

ZString stabilizer_support(int k, const StabilizerElement& el);

// Terms ordered level k down to 1, block index ascending, x in {1,2};
// 3^k - 1 terms, the level-j term has weight 2*3^(j-1). k = 0 gives the
// empty Hamiltonian.
ZHamiltonian build_canonical_hamiltonian(int k);

// Block-root CNOT cascades, innermost triples first, each triple driven in
// both directions (the A, A', B, B' layer pattern). Conjugation maps every
// stabilizer element to a distinct singleton Z_{eta x 0^(j-1)} and the
// all-spin product to the root singleton.
Circuit canonical_disentangler(int k);

struct ZmuDecomposition {
  bool includes_logical = true;  // the all-spin product Z^k_0
  std::vector<StabilizerElement> elements;
};

// Z_mu as a product of the logical operator and one stabilizer element per
// level, with the trailing subscript trit doubled mod 3.
ZmuDecomposition zmu_decompose(const TritLabel& mu, int k);

// Number of independent Z factors in the transformed Z_mu Z_nu; equals the
// support size of transform_operator over the canonical disentangler.
int effective_distance(const TritLabel& mu, const TritLabel& nu, int k);

// delta(root, mu) = 3k - 4 L(mu) + zeros(mu) - 2, with L and zeros counted
// over the trailing k trits.
int root_effective_distance(const TritLabel& mu, int k);

}  // namespace stabtherm
