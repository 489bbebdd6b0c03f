#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stabtherm {

enum class StructureKind { s1, s2, s3, s4, canonical, line, star };

bool kind_is_leveled(StructureKind kind);  // s1..s4, canonical: N = 3^k
const char* kind_name(StructureKind kind);
StructureKind kind_from_name(const std::string& name);

// Which family to build and how large. s1..s4 and canonical take a
// concatenation level k (N = 3^k); line and star take an explicit size.
struct StructureSpec {
  StructureKind kind = StructureKind::s1;
  int level = 0;           // k, for leveled kinds
  std::uint64_t size = 0;  // N, for line/star

  static StructureSpec leveled(StructureKind kind, int k);
  static StructureSpec sized(StructureKind kind, std::uint64_t n);

  std::uint64_t num_spins() const;  // throws if 3^level overflows
  double log_num_spins() const;
  std::string describe() const;
};

// Rooted spanning tree plus the sibling-pair edges that close the triangles.
// Node ids are assigned in construction order; the root is always 0.
struct SpinGraph {
  int num_spins = 1;
  std::vector<int> parent;        // parent[0] == 0
  std::vector<int> depth;         // depth[0] == 0
  std::vector<int> pair_partner;  // -1 when the spin is not in a sibling pair
  std::vector<std::pair<int, int>> tree_edges;     // (parent, child)
  std::vector<std::pair<int, int>> sibling_edges;  // (u, v) with parent(u) == parent(v)
};

// Recursive constructors for the memory structures plus line/star reference
// graphs. Rejects the canonical kind (its Hamiltonian is many-body; see
// build_canonical_hamiltonian) and graphs larger than the symbolic cap.
SpinGraph build_structure(const StructureSpec& spec);

inline constexpr std::uint64_t kMaxGraphSpins = 2187;  // 3^7

// f(d) = number of nodes at tree distance d from the root
std::map<int, std::int64_t> depth_profile(const SpinGraph& graph);

// Plain-text edge list: header "N <count> root 0", then "T u v" / "S u v".
std::string to_edge_list(const SpinGraph& graph);

}  // namespace stabtherm
