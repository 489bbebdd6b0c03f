#include "stabtherm/pauli.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace stabtherm {

ZString::ZString(int num_spins) : n_(num_spins) {
  if (num_spins < 0) throw std::invalid_argument("negative spin count");
  words_.assign((num_spins + 63) / 64, 0);
}

ZString ZString::from_indices(int num_spins, const std::vector<int>& idx) {
  ZString z(num_spins);
  for (int i : idx) z.set(i);
  return z;
}

int ZString::weight() const {
  int w = 0;
  for (std::uint64_t word : words_) w += std::popcount(word);
  return w;
}

bool ZString::test(int spin) const {
  return (words_[spin / 64] >> (spin % 64)) & 1u;
}

void ZString::set(int spin) {
  if (spin < 0 || spin >= n_) throw std::out_of_range("spin index out of range");
  words_[spin / 64] |= std::uint64_t{1} << (spin % 64);
}

void ZString::toggle(int spin) {
  if (spin < 0 || spin >= n_) throw std::out_of_range("spin index out of range");
  words_[spin / 64] ^= std::uint64_t{1} << (spin % 64);
}

void ZString::multiply(const ZString& other) {
  if (other.n_ != n_) throw std::invalid_argument("Z-string width mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

std::vector<int> ZString::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

ZString conjugate_cnot(ZString zs, int control, int target) {
  if (control == target) throw std::invalid_argument("CNOT control equals target");
  if (zs.test(target)) zs.toggle(control);
  return zs;
}

ZHamiltonian build_graph_hamiltonian(const SpinGraph& graph) {
  ZHamiltonian h;
  h.num_spins = graph.num_spins;
  h.terms.reserve(graph.tree_edges.size() + graph.sibling_edges.size());
  for (const auto& [p, c] : graph.tree_edges)
    h.terms.push_back(ZString::from_indices(graph.num_spins, {p, c}));
  for (const auto& [u, v] : graph.sibling_edges)
    h.terms.push_back(ZString::from_indices(graph.num_spins, {u, v}));
  return h;
}

Circuit tree_disentangler(const SpinGraph& graph) {
  Circuit circ;
  circ.gates.reserve(graph.tree_edges.size());
  int dmax = 0;
  for (int d : graph.depth) dmax = std::max(dmax, d);
  // leaves first: gates whose control sits at depth dmax-1, then inward;
  // tree_edges are in ascending child id within a layer by construction
  for (int d = dmax - 1; d >= 0; --d)
    for (const auto& [p, c] : graph.tree_edges)
      if (graph.depth[p] == d) circ.gates.push_back({p, c});
  return circ;
}

ZString transform_operator(ZString op, const Circuit& circuit) {
  for (const Gate& g : circuit.gates) op = conjugate_cnot(std::move(op), g.control, g.target);
  return op;
}

ZHamiltonian transform_hamiltonian(const ZHamiltonian& ham, const Circuit& circuit) {
  ZHamiltonian out;
  out.num_spins = ham.num_spins;
  out.terms.reserve(ham.terms.size());
  for (const ZString& t : ham.terms) out.terms.push_back(transform_operator(t, circuit));
  return out;
}

std::string to_gate_list(const Circuit& circuit) {
  std::ostringstream os;
  for (const Gate& g : circuit.gates) os << "CNOT " << g.control << " " << g.target << "\n";
  return os.str();
}

std::string to_term_list(const ZHamiltonian& ham) {
  std::ostringstream os;
  for (const ZString& t : ham.terms) {
    const auto idx = t.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? " " : "") << idx[i];
    os << "\n";
  }
  return os.str();
}

// ---- canonical stabilizer ----

namespace {

std::uint32_t pow3(int e) {
  std::uint32_t v = 1;
  for (int i = 0; i < e; ++i) v *= 3;
  return v;
}

void check_level(int k) {
  if (k < 0) throw std::invalid_argument("negative concatenation level");
  if (k > 7) throw std::invalid_argument("canonical level exceeds the symbolic cap of 3^7 spins");
}

}  // namespace

TritLabel TritLabel::from_index(int k, std::uint32_t index) {
  std::string s(k + 1, '0');
  for (int pos = 0; pos < k; ++pos) {
    s[k - pos] = static_cast<char>('0' + index % 3);
    index /= 3;
  }
  if (index != 0) throw std::invalid_argument("index exceeds 3^k - 1");
  return TritLabel{s};
}

std::uint32_t TritLabel::index() const {
  std::uint32_t v = 0;
  for (std::size_t i = 1; i < trits.size(); ++i) v = 3 * v + (trits[i] - '0');
  return v;
}

void validate_label(const TritLabel& mu, int k) {
  if (static_cast<int>(mu.trits.size()) != k + 1)
    throw std::invalid_argument("trit label must have k+1 trits");
  if (mu.trits[0] != '0') throw std::invalid_argument("leading trit must be 0");
  for (char c : mu.trits)
    if (c < '0' || c > '2') throw std::invalid_argument("trit label may only contain 0, 1, 2");
}

ZString stabilizer_support(int k, const StabilizerElement& el) {
  check_level(k);
  const int j = el.level;
  if (j < 1 || j > k) throw std::invalid_argument("stabilizer level out of range");
  if (static_cast<int>(el.subscript.size()) != k - j + 2)
    throw std::invalid_argument("stabilizer subscript has wrong length");
  if (el.subscript[0] != '0') throw std::invalid_argument("leading subscript trit must be 0");
  std::uint32_t eta = 0;
  for (std::size_t i = 0; i + 1 < el.subscript.size(); ++i) {
    const char c = el.subscript[i];
    if (c < '0' || c > '2') throw std::invalid_argument("bad trit in subscript");
    eta = 3 * eta + (c - '0');
  }
  const int x = el.subscript.back() - '0';
  if (x < 0 || x > 2) throw std::invalid_argument("bad trit in subscript");

  const std::uint32_t block = pow3(j - 1);
  ZString z(static_cast<int>(pow3(k)));
  auto fill = [&](std::uint32_t base) {
    for (std::uint32_t i = 0; i < block; ++i) z.toggle(static_cast<int>(base + i));
  };
  if (x == 0) {  // composite: A_{eta 1} A_{eta 2} = Z-block_{eta 1} Z-block_{eta 2}
    fill((eta * 3 + 1) * block);
    fill((eta * 3 + 2) * block);
  } else {
    fill((eta * 3 + 0) * block);
    fill((eta * 3 + static_cast<std::uint32_t>(x)) * block);
  }
  return z;
}

ZHamiltonian build_canonical_hamiltonian(int k) {
  check_level(k);
  ZHamiltonian h;
  h.num_spins = static_cast<int>(pow3(k));
  if (k == 0) return h;
  for (int j = k; j >= 1; --j) {
    const std::uint32_t block = pow3(j - 1);
    for (std::uint32_t eta = 0; eta < pow3(k - j); ++eta) {
      for (int x = 1; x <= 2; ++x) {
        ZString z(h.num_spins);
        for (std::uint32_t i = 0; i < block; ++i) {
          z.toggle(static_cast<int>(eta * 3 * block + i));
          z.toggle(static_cast<int>((eta * 3 + static_cast<std::uint32_t>(x)) * block + i));
        }
        h.terms.push_back(std::move(z));
      }
    }
  }
  return h;
}

Circuit canonical_disentangler(int k) {
  check_level(k);
  Circuit circ;
  if (k == 0) return circ;
  // per level: CNOTs between the three sub-block roots of every block,
  // parent-controlled then child-controlled
  for (int j = 1; j <= k; ++j) {
    const int block = static_cast<int>(pow3(j - 1));
    const std::uint32_t nblocks = pow3(k - j);
    for (std::uint32_t eta = 0; eta < nblocks; ++eta) {
      const int r0 = static_cast<int>(eta * 3) * block;
      circ.gates.push_back({r0, r0 + block});
      circ.gates.push_back({r0, r0 + 2 * block});
    }
    for (std::uint32_t eta = 0; eta < nblocks; ++eta) {
      const int r0 = static_cast<int>(eta * 3) * block;
      circ.gates.push_back({r0 + block, r0});
      circ.gates.push_back({r0 + 2 * block, r0});
    }
  }
  return circ;
}

ZmuDecomposition zmu_decompose(const TritLabel& mu, int k) {
  check_level(k);
  validate_label(mu, k);
  ZmuDecomposition out;
  for (int j = k; j >= 1; --j) {
    // subscript: mu_k ... mu_j followed by (2 mu_{j-1}) mod 3
    StabilizerElement el;
    el.level = j;
    el.subscript = mu.trits.substr(0, k - j + 1);
    const int t = mu.trits[k - j + 1] - '0';
    el.subscript.push_back(static_cast<char>('0' + (2 * t) % 3));
    out.elements.push_back(std::move(el));
  }
  return out;
}

int effective_distance(const TritLabel& mu, const TritLabel& nu, int k) {
  check_level(k);
  validate_label(mu, k);
  validate_label(nu, k);
  if (mu.trits == nu.trits) return 0;
  int q = -1;  // q+1 leading trits agree
  while (mu.trits[q + 1] == nu.trits[q + 1]) ++q;
  // positions are counted from the most significant trit: trits[i] = mu_{k-i}
  int zeros = 0;
  for (int i = q + 2; i <= k; ++i) {
    zeros += mu.trits[i] == '0';
    zeros += nu.trits[i] == '0';
  }
  const int t1 = mu.trits[q + 1] - '0';
  const int t2 = nu.trits[q + 1] - '0';
  const int last = (t1 * t2) / 2 ? 2 : 1;  // 2 only when {t1,t2} = {1,2}
  return 2 * (k - q - 1) + zeros + last;
}

int root_effective_distance(const TritLabel& mu, int k) {
  check_level(k);
  validate_label(mu, k);
  if (mu.trits.find_first_not_of('0') == std::string::npos)
    throw std::invalid_argument("the root specialization applies to mu != root");
  int lead = 0;
  while (lead < k && mu.trits[1 + lead] == '0') ++lead;
  int zeros = 0;
  for (int i = 1; i <= k; ++i) zeros += mu.trits[i] == '0';
  return 3 * k - 4 * lead + zeros - 2;
}

}  // namespace stabtherm
