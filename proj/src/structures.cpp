#include "stabtherm/structures.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stabtherm {

bool kind_is_leveled(StructureKind kind) {
  switch (kind) {
    case StructureKind::line:
    case StructureKind::star:
      return false;
    default:
      return true;
  }
}

const char* kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::s1: return "s1";
    case StructureKind::s2: return "s2";
    case StructureKind::s3: return "s3";
    case StructureKind::s4: return "s4";
    case StructureKind::canonical: return "canonical";
    case StructureKind::line: return "line";
    case StructureKind::star: return "star";
  }
  return "?";
}

StructureKind kind_from_name(const std::string& name) {
  if (name == "s1") return StructureKind::s1;
  if (name == "s2") return StructureKind::s2;
  if (name == "s3") return StructureKind::s3;
  if (name == "s4") return StructureKind::s4;
  if (name == "canonical") return StructureKind::canonical;
  if (name == "line") return StructureKind::line;
  if (name == "star") return StructureKind::star;
  throw std::invalid_argument("unknown structure kind '" + name +
                              "' (expected s1|s2|s3|s4|canonical|line|star)");
}

StructureSpec StructureSpec::leveled(StructureKind kind, int k) {
  if (!kind_is_leveled(kind))
    throw std::invalid_argument("line/star take an explicit size, not a level");
  if (k < 0) throw std::invalid_argument("concatenation level must be non-negative");
  StructureSpec s;
  s.kind = kind;
  s.level = k;
  return s;
}

StructureSpec StructureSpec::sized(StructureKind kind, std::uint64_t n) {
  if (kind_is_leveled(kind))
    throw std::invalid_argument("s1..s4/canonical take a level, not a size");
  if (n < 1) throw std::invalid_argument("size must be at least 1");
  StructureSpec s;
  s.kind = kind;
  s.size = n;
  return s;
}

std::uint64_t StructureSpec::num_spins() const {
  if (!kind_is_leveled(kind)) return size;
  if (level > 40) throw std::overflow_error("3^level exceeds 64-bit range; use log_num_spins");
  std::uint64_t n = 1;
  for (int i = 0; i < level; ++i) n *= 3;
  return n;
}

double StructureSpec::log_num_spins() const {
  if (kind_is_leveled(kind)) return level * std::log(3.0);
  return std::log(static_cast<double>(size));
}

std::string StructureSpec::describe() const {
  std::ostringstream os;
  os << kind_name(kind);
  if (kind_is_leveled(kind))
    os << "(k=" << level << ")";
  else
    os << "(N=" << size << ")";
  return os.str();
}

namespace {

int add_child(SpinGraph& g, int p) {
  const int id = g.num_spins++;
  g.parent.push_back(p);
  g.depth.push_back(g.depth[p] + 1);
  g.pair_partner.push_back(-1);
  g.tree_edges.emplace_back(p, id);
  return id;
}

void add_sibling_pair(SpinGraph& g, int p) {
  const int u = add_child(g, p);
  const int v = add_child(g, p);
  g.sibling_edges.emplace_back(u, v);
  g.pair_partner[u] = v;
  g.pair_partner[v] = u;
}

}  // namespace

SpinGraph build_structure(const StructureSpec& spec) {
  if (spec.kind == StructureKind::canonical)
    throw std::invalid_argument(
        "the canonical Hamiltonian is many-body and has no two-body spin graph; "
        "use build_canonical_hamiltonian");

  SpinGraph g;
  g.parent = {0};
  g.depth = {0};
  g.pair_partner = {-1};

  if (!kind_is_leveled(spec.kind)) {
    if (spec.size > kMaxGraphSpins)
      throw std::invalid_argument("graph size exceeds the symbolic cap of 3^7 spins");
    if (spec.kind == StructureKind::line) {
      for (std::uint64_t i = 1; i < spec.size; ++i) add_child(g, static_cast<int>(i - 1));
    } else {
      for (std::uint64_t i = 1; i < spec.size; ++i) add_child(g, 0);
    }
    return g;
  }

  if (spec.level < 0) throw std::invalid_argument("negative concatenation level");
  if (spec.level > 7)
    throw std::invalid_argument("graph size exceeds the symbolic cap of 3^7 spins");

  // s2 grows sibling pairs on an s1 core, s4 grows free leaves on an s3 core;
  // all four add children to every node of the previous level.
  const bool core_pairs =
      spec.kind == StructureKind::s3 || spec.kind == StructureKind::s4;
  for (int lvl = 1; lvl <= spec.level; ++lvl) {
    const bool last = lvl == spec.level;
    bool pairs = core_pairs;
    if (last && spec.kind == StructureKind::s2) pairs = true;
    if (last && spec.kind == StructureKind::s4) pairs = false;
    const int existing = g.num_spins;
    for (int node = 0; node < existing; ++node) {
      if (pairs)
        add_sibling_pair(g, node);
      else {
        add_child(g, node);
        add_child(g, node);
      }
    }
  }
  return g;
}

std::map<int, std::int64_t> depth_profile(const SpinGraph& graph) {
  std::map<int, std::int64_t> f;
  for (int d : graph.depth) ++f[d];
  return f;
}

std::string to_edge_list(const SpinGraph& graph) {
  std::ostringstream os;
  os << "N " << graph.num_spins << " root 0\n";
  for (const auto& [p, c] : graph.tree_edges) os << "T " << p << " " << c << "\n";
  for (const auto& [u, v] : graph.sibling_edges) os << "S " << u << " " << v << "\n";
  return os.str();
}

}  // namespace stabtherm
